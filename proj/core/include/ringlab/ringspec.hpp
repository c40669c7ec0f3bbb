#pragma once

#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Abstract syntax for ring construction recipes.
///
///   ring := zmod(n) | gf(p[,k]) | prod(ring,...) | mat(ring,k)
///         | tri(field; n; dsrc) | trimat(ring,ring) | idealize(field,m)
///   dsrc := gen[matrix,...] | companion[c0,c1,...] | scalars | full
///
/// Matrices are bracketed row lists; polynomial coefficients are listed
/// low-degree first.
struct RingSpec {
    enum class Kind { Zmod, Gf, Prod, MatRing, Tri, Trimat, Idealize };
    enum class Dsrc { None, Gen, Companion, Scalars, Full };

    Kind kind = Kind::Zmod;
    long long n = 0;  // zmod modulus / mat size / tri n / idealize dimension
    long long p = 0;  // gf characteristic
    int k = 1;        // gf degree
    std::vector<RingSpec> children;  // prod factors, mat base, trimat (A,B), tri/idealize field
    Dsrc dsrc = Dsrc::None;
    std::vector<std::vector<std::vector<long long>>> gen_mats;
    std::vector<long long> comp_poly;

    bool operator==(const RingSpec&) const = default;
    std::string print() const;
};

/// Recursive-descent parse with position-annotated errors. Structural
/// problems (non-prime gf base, zmod(0), ...) raise SemanticError.
RingSpec parse_spec(const std::string& text);

/// Evaluate a recipe into explicit tables.
RingPtr build_ring(const RingSpec& spec, const Bounds& bounds = {});

// tri-ring element codec (rings carrying TriInfo)
int tri_encode(const Ring& r, int d, const std::vector<int>& col, int aidx);
void tri_decode(const Ring& r, int code, int& d, std::vector<int>& col, int& aidx);

}  // namespace ringlab
