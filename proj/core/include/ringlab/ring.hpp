#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/field.hpp"
#include "ringlab/matrix.hpp"

namespace ringlab {

/// Extra structure kept when a ring was built as (D, D^n, D').
/// Element layout: index = (d * |D|^n + v) * |D'| + a, where v is the
/// mixed-radix code of the column vector and a indexes dprime.
struct TriInfo {
    FieldPtr D;
    int n = 0;
    std::vector<Mat> dprime;  // sorted, closed subring of M_n(D)
};

/// Enumerated finite unital ring: full addition and multiplication tables,
/// elements 0..size-1 with 0 the zero element.
class Ring {
public:
    int size = 0;
    int one = 0;
    std::vector<int> add_tab, mul_tab;
    std::string recipe;
    std::optional<TriInfo> tri;

    int add(int a, int b) const { return add_tab[static_cast<std::size_t>(a) * size + b]; }
    int mul(int a, int b) const { return mul_tab[static_cast<std::size_t>(a) * size + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    bool is_unit(int a) const { return units_[a] != 0; }
    const std::vector<int>& units() const { return unit_list_; }

    /// Finalize derived tables; call after filling add_tab/mul_tab.
    void seal();

private:
    std::vector<int> neg_;
    std::vector<char> units_;
    std::vector<int> unit_list_;
};

using RingPtr = std::shared_ptr<const Ring>;

enum class VerifyMode { Full, Sampled };

struct LawViolation {
    std::string law;
    int x, y, z;
};

/// Ring axiom check; Full mode iterates all size^3 triples (size <= 64),
/// Sampled mode uses seeded random triples.
std::optional<LawViolation> verify_ring_axioms(const Ring& r, VerifyMode mode,
                                               const Bounds& bounds = {});

}  // namespace ringlab
