#pragma once

#include <cstdint>
#include <string>

#include "ringlab/criteria.hpp"

namespace ringlab {

enum class Format { Text, Json };

/// Options affecting only presentation. Timings are excluded by default so
/// that output for a fixed (spec, bounds, seed) is bit-identical across runs.
struct ReportOptions {
    bool include_timings = false;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
};

extern const char* const kReportSchema;  // "injdom-report/1"

std::string emit_classification(const RingClassification& rc, const Bounds& bounds, Format fmt,
                                const ReportOptions& opt = {});
std::string emit_simple_mc(const SimpleMCClassification& smc, RingCtx& ctx, const Bounds& bounds,
                           Format fmt, const ReportOptions& opt = {});
std::string emit_oracle(RingCtx& ctx, const Bounds& bounds, Format fmt,
                        const ReportOptions& opt = {});
std::string emit_witness(const WitnessSearch& ws, const std::string& recipe, const Bounds& bounds,
                         Format fmt, const ReportOptions& opt = {});
std::string emit_simples(RingCtx& ctx, const Bounds& bounds, Format fmt,
                         const ReportOptions& opt = {});
std::string emit_cross_check(const RingClassification& rc, const Bounds& bounds, Format fmt,
                             const ReportOptions& opt = {});
std::string emit_full_report(RingCtx& ctx, const Bounds& bounds, Format fmt,
                             const ReportOptions& opt = {});

}  // namespace ringlab
