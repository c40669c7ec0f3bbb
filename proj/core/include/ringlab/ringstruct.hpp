#pragma once

#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// J(R) = {x : 1 - xr is a unit for all r}, sorted. Quasi-regularity is the
/// production path; the maximal-right-ideal intersection is cross-checked in
/// tests and the fixture suite.
std::vector<int> jacobson_radical(const Ring& r);

/// Some power of the set-product of J with itself is {0}.
bool radical_is_nilpotent(const Ring& r, const std::vector<int>& jac);

bool is_local_ring(const Ring& r);
bool is_commutative(const Ring& r);
bool is_semisimple_ring(const Ring& r);

/// Smallest two-sided ideal containing the generators.
std::vector<int> two_sided_ideal_closure(const Ring& r, const std::vector<int>& gens);

struct RadicalIdeals {
    std::vector<std::vector<int>> ideals;  // all two-sided ideals inside J(R)
    bool radical_properly_contains_nonzero_ideal;
};
RadicalIdeals ideals_within_radical(const Ring& r, const Bounds& bounds = {});

std::vector<int> all_idempotents(const Ring& r);
std::vector<int> central_idempotents(const Ring& r);

/// Complete set of primitive pairwise-orthogonal idempotents summing to 1.
std::vector<int> primitive_orthogonal_idempotents(const Ring& r);

/// Ring on an additively and multiplicatively closed subset with its own
/// identity (e.g. eRe or eR for central e).
struct SubringView {
    RingPtr ring;
    std::vector<int> carrier;  // carrier[i] = parent element of local index i
};
SubringView corner_ring(const Ring& r, const std::vector<int>& carrier, int one_elt,
                        const std::string& recipe);

struct RingFactor {
    RingPtr ring;
    std::vector<int> carrier;
    int idempotent;
    bool semisimple;
};

/// Indecomposable ring direct summands cut out by the primitive central
/// idempotents, together with the semisimple / non-semisimple split.
struct Decomposition {
    std::vector<RingFactor> factors;
    std::vector<std::size_t> semisimple_factors;  // indices into factors (the "S" part)
    std::vector<std::size_t> other_factors;       // the "T" part
};
Decomposition decompose_ring(const Ring& r, const Bounds& bounds = {});

struct RingQuotient {
    RingPtr ring;
    std::vector<int> proj;  // proj[x] = index of x + I
};
RingQuotient quotient_ring(const Ring& r, const std::vector<int>& ideal);

RingPtr opposite_ring(const Ring& r);

}  // namespace ringlab
