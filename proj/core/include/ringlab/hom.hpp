#pragma once

#include "ringlab/module.hpp"

namespace ringlab {

/// Total module map recorded as a value table over the domain carrier.
struct ModuleMap {
    ModPtr dom, cod;
    std::vector<int> val;

    bool additive_and_equivariant() const;
    bool bijective() const;
};

/// Generator set chosen greedily: largest cyclic submodule first, ties broken
/// by smallest element index. Cached on the module.
const std::vector<int>& greedy_generators(const Module& m);

/// All module maps dom -> cod, found by assigning generator images and
/// propagating by additivity/equivariance with early conflict pruning.
/// Results sorted by value table. `candidates` (when given) accumulates the
/// number of generator-image assignments tried; exceeding
/// bounds.max_hom_candidates raises BoundExceeded.
std::vector<ModuleMap> hom_enumerate(ModPtr dom, ModPtr cod, const Bounds& bounds = {},
                                     long long* candidates = nullptr);

/// Isomorphism test: cheap invariant screen (needs ring_socle for profiles),
/// then a search for a bijective map.
bool is_isomorphic(ModPtr a, ModPtr b, const Subset& ring_socle, const Bounds& bounds = {});

}  // namespace ringlab
