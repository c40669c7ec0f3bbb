#include "ringlab/linalg.hpp"

#include <algorithm>
#include <set>

namespace ringlab {

int row_span_dim(const std::vector<std::vector<int>>& rows, int n, const FieldPtr& F) {
    std::vector<std::vector<int>> basis;  // in echelon form
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw SemanticError("row_span_dim: ragged input");
        std::vector<int> v = r;
        for (const auto& b : basis) {
            int piv = 0;
            while (b[piv] == F->zero()) ++piv;
            if (v[piv] != F->zero()) {
                int f = v[piv];
                for (int j = 0; j < n; ++j) v[j] = F->sub(v[j], F->mul(f, b[j]));
            }
        }
        int piv = -1;
        for (int j = 0; j < n; ++j)
            if (v[j] != F->zero()) { piv = j; break; }
        if (piv < 0) continue;
        int s = F->inv(v[piv]);
        for (int j = 0; j < n; ++j) v[j] = F->mul(s, v[j]);
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), [&](const auto& x, const auto& y) {
            auto pv = [&](const std::vector<int>& z) {
                for (int j = 0; j < n; ++j)
                    if (z[j] != F->zero()) return j;
                return n;
            };
            return pv(x) < pv(y);
        });
        // re-reduce above pivots to keep echelon form
        for (std::size_t i = basis.size(); i-- > 1;) {
            int piv2 = 0;
            while (basis[i][piv2] == F->zero()) ++piv2;
            for (std::size_t t = 0; t < i; ++t) {
                int f = basis[t][piv2];
                if (f == F->zero()) continue;
                for (int j = 0; j < n; ++j) basis[t][j] = F->sub(basis[t][j], F->mul(f, basis[i][j]));
            }
        }
    }
    return static_cast<int>(basis.size());
}

Poly min_poly(const Mat& A) {
    if (!A.square()) throw SemanticError("min_poly: non-square matrix");
    const auto& F = A.F;
    const int n = A.rows;
    const int nn = n * n;
    // find least d with I, A, ..., A^d linearly dependent; solve for the
    // monic dependency
    std::vector<Mat> powers{Mat::identity(F, n)};
    for (int d = 1;; ++d) {
        powers.push_back(powers.back() * A);
        // solve sum_{i<d} c_i A^i = -A^d by elimination over the flattened system
        std::vector<std::vector<int>> aug;  // columns: c_0..c_{d-1} | rhs
        for (int e = 0; e < nn; ++e) {
            std::vector<int> row(d + 1, F->zero());
            for (int i = 0; i < d; ++i) row[i] = powers[i].a[e];
            row[d] = F->neg(powers[d].a[e]);
            aug.push_back(std::move(row));
        }
        // Gaussian elimination
        std::vector<int> sol(d, F->zero());
        int rank = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < d && rank < nn; ++col) {
            int piv = -1;
            for (int r = rank; r < nn; ++r)
                if (aug[r][col] != F->zero()) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(aug[rank], aug[piv]);
            int s = F->inv(aug[rank][col]);
            for (int j = 0; j <= d; ++j) aug[rank][j] = F->mul(s, aug[rank][j]);
            for (int r = 0; r < nn; ++r) {
                if (r == rank) continue;
                int f = aug[r][col];
                if (f == F->zero()) continue;
                for (int j = 0; j <= d; ++j) aug[r][j] = F->sub(aug[r][j], F->mul(f, aug[rank][j]));
            }
            pivcol.push_back(col);
            ++rank;
        }
        bool consistent = true;
        for (int r = rank; r < nn; ++r)
            if (aug[r][d] != F->zero()) { consistent = false; break; }
        if (consistent) {
            for (int i = 0; i < rank; ++i) sol[pivcol[i]] = aug[i][d];
            std::vector<int> coeffs(sol);
            coeffs.push_back(F->one());
            return Poly(F, coeffs);
        }
        if (d > nn) throw SemanticError("min_poly: no dependency found");  // unreachable
    }
}

Mat companion(const Poly& p) {
    if (!p.monic() || p.degree() < 1) throw SemanticError("companion: monic polynomial of degree >= 1 required");
    const auto& F = p.F;
    const int n = p.degree();
    Mat C(F, n, n);
    for (int i = 0; i + 1 < n; ++i) C.at(i, i + 1) = F->one();
    for (int j = 0; j < n; ++j) C.at(n - 1, j) = F->neg(p.c[j]);
    return C;
}

long long gl_order(int n, long long q) {
    long long qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    long long total = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        total *= (qn - qi);
        qi *= q;
    }
    return total;
}

std::vector<Mat> gl_enumerate(int n, const FieldPtr& F, const Bounds& bounds) {
    if (!F->finite()) throw SemanticError("gl_enumerate: finite field required");
    const long long q = F->size();
    long long count = 1;
    for (int i = 0; i < n * n; ++i) {
        count *= q;
        if (count > bounds.max_gl_matrices)
            throw BoundExceeded("gl_enumerate: " + std::to_string(q) + "^" + std::to_string(n * n) +
                                " exceeds enumeration bound");
    }
    std::vector<Mat> out;
    std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
    for (long long code = 0; code < count; ++code) {
        long long c = code;
        for (int i = n * n - 1; i >= 0; --i) { entries[i] = static_cast<int>(c % q); c /= q; }
        Mat m(F, n, n, entries);
        if (m.invertible()) out.push_back(std::move(m));
    }
    return out;
}

SubalgebraClosure subalgebra_closure(const std::vector<Mat>& gens, const FieldPtr& F,
                                     long long max_size) {
    if (gens.empty()) throw SemanticError("subalgebra_closure: no generators");
    const int n = gens.front().rows;
    for (const auto& g : gens)
        if (!g.square() || g.rows != n) throw SemanticError("subalgebra_closure: generators must be square of equal size");

    std::set<std::vector<int>> seen;
    std::vector<Mat> elems;
    auto push = [&](const Mat& m) {
        if (seen.insert(m.a).second) {
            elems.push_back(m);
            if (static_cast<long long>(elems.size()) > max_size)
                throw BoundExceeded("subalgebra_closure: closure exceeds bound");
            return true;
        }
        return false;
    };
    push(Mat(F, n, n));
    push(Mat::identity(F, n));
    for (const auto& g : gens) push(g);

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mat> snapshot = elems;
        for (const auto& x : snapshot) {
            if (push(x.neg())) grew = true;
            if (F->finite())
                for (int s = 0; s < F->size(); ++s)
                    if (push(x.scaled(s))) grew = true;
            for (const auto& y : snapshot) {
                if (push(x + y)) grew = true;
                if (push(x * y)) grew = true;
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    bool division = true;
    for (const auto& x : elems) {
        if (x.is_zero()) continue;
        if (!x.invertible() || !seen.count(x.inverse().a)) { division = false; break; }
    }
    return {std::move(elems), division};
}

}  // namespace ringlab
