#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

using Subset = std::vector<int>;  // sorted element list

struct Profile {
    Subset socle;
    Subset radical;
    Subset singular;
    int length = 0;  // composition length
    bool semisimple = false;
    bool local = false;
};

/// Enumerated finite right module: addition table plus action table
/// (element x ring element -> element), with 0 the zero element.
class Module {
public:
    RingPtr R;
    int size = 0;
    std::vector<int> add_tab;
    std::vector<int> act_tab;
    std::string name;

    int add(int a, int b) const { return add_tab[static_cast<std::size_t>(a) * size + b]; }
    int act(int m, int r) const { return act_tab[static_cast<std::size_t>(m) * R->size + r]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    void seal();

    // caches filled on demand
    mutable std::optional<std::vector<Subset>> lattice_cache;
    mutable std::optional<Profile> profile_cache;
    mutable std::optional<std::vector<int>> gens_cache;

private:
    std::vector<int> neg_;
};

using ModPtr = std::shared_ptr<const Module>;

/// R as a right module over itself.
ModPtr realize_regular(RingPtr r);

/// The module (D, W)_i over a tri-built ring, W a right-closed set of
/// matrices (D' itself or all of M_n(D)); i is a 0-based row index.
/// Action: (a, A) * (a1, x, A1) = (a*a1 + row_i(A) . x, A*A1).
ModPtr realize_paired(RingPtr triR, const std::vector<Mat>& w, int i);

/// Module on a submodule subset (indices remapped; 0 stays 0).
ModPtr submodule_module(ModPtr m, const Subset& k, const std::string& name = "");

/// Factor module M/K with canonical coset encoding; also returns the
/// projection when requested.
ModPtr quotient_module(ModPtr m, const Subset& k, std::vector<int>* proj = nullptr,
                       const std::string& name = "");

Subset submodule_closure(const Module& m, const std::vector<int>& gens);

/// Complete submodule lattice: cyclic submodules closed under pairwise sums.
/// Sorted by (size, lexicographic). Cached on the module.
const std::vector<Subset>& enumerate_submodules(const Module& m, const Bounds& bounds = {});

/// Maximal (proper) submodules, from the lattice.
std::vector<Subset> maximal_submodules(const Module& m, const Bounds& bounds = {});
std::vector<Subset> minimal_submodules(const Module& m, const Bounds& bounds = {});

/// socle / radical / singular submodule / length / local flags.
/// ring_socle = Soc(R_R), needed for the singular submodule (a right ideal of
/// a finite ring is essential iff it contains the right socle).
const Profile& structure_profile(const Module& m, const Subset& ring_socle,
                                 const Bounds& bounds = {});

/// Definitional essentiality: K meets every nonzero submodule of M.
bool is_essential_definitional(const Module& m, const Subset& k, const Bounds& bounds = {});

}  // namespace ringlab
