#pragma once

#include "ringlab/context.hpp"

namespace ringlab {

enum class ModClass { Injective, Poor, Middle };
const char* to_string(ModClass c);

/// Certificate that some map K -> M admits no extension N -> M: re-checkable
/// by recomputing Hom(N, M) and restricting.
struct ExtensionFailure {
    std::string test_module;    // name of N
    Subset submodule;           // K as a carrier subset of N
    std::vector<int> map_vals;  // f(k[i]) for each position i
    long long candidates_examined = 0;
};

struct InjectivityProfile {
    std::vector<std::pair<std::string, bool>> verdicts;  // test module -> M is N-injective
    bool injective = false;
    bool poor = false;
    bool semisimple_ring = false;
};

/// Exhaustive relative injectivity: every map from every submodule of N into
/// M extends to N.
bool relatively_injective(RingCtx& ctx, ModPtr m, ModPtr n, ExtensionFailure* fail = nullptr);

/// Baer test: injectivity relative to R_R.
bool is_injective(RingCtx& ctx, ModPtr m, ExtensionFailure* fail = nullptr);

/// Poorness via the complete finite test set: M is poor iff it is injective
/// relative to no local length-two module.
bool is_poor(RingCtx& ctx, ModPtr m);

ModClass classify_module(RingCtx& ctx, ModPtr m, InjectivityProfile* profile = nullptr,
                         ExtensionFailure* fail = nullptr);

struct MiddleWitness {
    ModPtr module;
    InjectivityProfile profile;
    std::string nonsemisimple_domain_member;  // a local length-two N with M N-injective
    ExtensionFailure failure;                 // why M is not injective
};

struct WitnessSearch {
    std::optional<MiddleWitness> witness;
    long long modules_scanned = 0;
};

/// Deterministic scan of cyclic modules R/K (ascending carrier size, then
/// canonical lattice order) followed by their submodules, up to size_bound.
WitnessSearch middle_witness_search(RingCtx& ctx, long long size_bound);

struct SimpleClassification {
    ModPtr mod;
    ModClass cls;
    bool projective;
};

struct SimpleMiddleClassResult {
    bool no_simple_middle_class = true;
    std::vector<SimpleClassification> per_simple;
};

/// Complete decision: finitely many simple classes, each fully classified.
SimpleMiddleClassResult has_no_simple_middle_class(RingCtx& ctx);

}  // namespace ringlab
