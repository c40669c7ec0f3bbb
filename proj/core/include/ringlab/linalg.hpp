#pragma once

#include <vector>

#include "ringlab/matrix.hpp"
#include "ringlab/poly.hpp"

namespace ringlab {

/// Dimension of the left span of the given rows inside F^n.
int row_span_dim(const std::vector<std::vector<int>>& rows, int n, const FieldPtr& F);

/// Monic polynomial of least degree annihilating the square matrix A.
Poly min_poly(const Mat& A);

/// Companion matrix of a monic polynomial of degree >= 1.
Mat companion(const Poly& p);

/// All invertible n x n matrices over a finite field, in lexicographic order
/// of their entry vectors. Throws BoundExceeded when |F|^(n*n) exceeds
/// bounds.max_gl_matrices.
std::vector<Mat> gl_enumerate(int n, const FieldPtr& F, const Bounds& bounds = {});

/// Number of invertible n x n matrices over GF(q).
long long gl_order(int n, long long q);

struct SubalgebraClosure {
    std::vector<Mat> elems;      // sorted canonically, includes 0 and I
    bool is_division_subring;    // every nonzero member has its inverse in the set
};

/// Smallest subset of M_n(F) containing 0, I and the generators, closed under
/// addition, negation, multiplication and F-scalar multiplication.
SubalgebraClosure subalgebra_closure(const std::vector<Mat>& gens, const FieldPtr& F,
                                     long long max_size = 4096);

}  // namespace ringlab
