#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ringlab/report.hpp"

namespace {

// exit codes: 0 any verdict (including undecided), 2 parse/usage error,
// 3 bound exhaustion, 4 semantic error in the spec
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kBoundError = 3;
constexpr int kSemanticError = 4;

}  // namespace

int main(int argc, char** argv) {
    using namespace ringlab;

    std::string verb, spec_text, format = "text";
    Bounds bounds;
    bool timings = false;

    CLI::App app{"injectivity-domain and middle-class classifier for finite rings"};
    app.add_option("verb", verb, "classify | simple-mc | oracle | witness | cross-check | simples | report")
        ->required()
        ->check(CLI::IsMember({"classify", "simple-mc", "oracle", "witness", "cross-check",
                               "simples", "report"}));
    app.add_option("spec", spec_text, "ring spec, e.g. trimat(zmod(4),zmod(2))")->required();
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-ring-size", bounds.max_ring_size);
    app.add_option("--max-module-size", bounds.max_module_size);
    app.add_option("--max-hom-candidates", bounds.max_hom_candidates);
    app.add_option("--threads", bounds.threads);
    app.add_option("--seed", bounds.seed);
    app.add_flag("--timings", timings, "include wall-clock timings in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    Format fmt = format == "json" ? Format::Json : Format::Text;
    ReportOptions opt;
    opt.seed = bounds.seed;

    try {
        RingSpec spec = parse_spec(spec_text);
        RingPtr ring = build_ring(spec, bounds);
        RingCtx ctx(ring, bounds);

        auto run = [&](const ReportOptions& o) -> std::string {
            if (verb == "classify")
                return emit_classification(classify_ring_no_middle_class(ctx), bounds, fmt, o);
            if (verb == "simple-mc")
                return emit_simple_mc(classify_simple_middle_class(ctx), ctx, bounds, fmt, o);
            if (verb == "oracle") return emit_oracle(ctx, bounds, fmt, o);
            if (verb == "witness")
                return emit_witness(middle_witness_search(ctx, bounds.max_module_size),
                                    ring->recipe, bounds, fmt, o);
            if (verb == "cross-check")
                return emit_cross_check(classify_ring_no_middle_class(ctx), bounds, fmt, o);
            if (verb == "simples") return emit_simples(ctx, bounds, fmt, o);
            return emit_full_report(ctx, bounds, fmt, o);  // report
        };

        auto t0 = std::chrono::steady_clock::now();
        std::string out = run(opt);
        if (timings) {
            // rerun with warm caches so the recorded time covers the computation
            opt.include_timings = true;
            opt.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            out = run(opt);
        }
        std::cout << out;
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exhausted: " << e.what() << "\n";
        return kBoundError;
    } catch (const SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kSemanticError;
    }
}
