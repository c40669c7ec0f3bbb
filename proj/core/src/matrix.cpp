#include "ringlab/matrix.hpp"

namespace ringlab {

Mat::Mat(FieldPtr field, int r, int c, std::vector<int> entries)
    : F(std::move(field)), rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<std::size_t>(r) * c)
        throw SemanticError("matrix entry count does not match dimensions");
}

Mat Mat::identity(FieldPtr F, int n) { return scalar(F, n, F->one()); }

Mat Mat::scalar(FieldPtr F, int n, int s) {
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

std::vector<int> Mat::row(int i) const {
    return std::vector<int>(a.begin() + static_cast<std::size_t>(i) * cols,
                            a.begin() + static_cast<std::size_t>(i + 1) * cols);
}

bool Mat::is_zero() const {
    for (int x : a)
        if (x != F->zero()) return false;
    return true;
}

bool Mat::is_scalar() const {
    if (!square()) return false;
    int d = at(0, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? d : F->zero())) return false;
    return true;
}

bool Mat::lower_triangular() const {
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != F->zero()) return false;
    return true;
}

bool Mat::upper_triangular() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < i && j < cols; ++j)
            if (at(i, j) != F->zero()) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(F, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = F->add(a[i], o.a[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + o.neg(); }

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw SemanticError("matrix product shape mismatch");
    Mat r(F, rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            int aik = at(i, k);
            if (aik == F->zero()) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = F->add(r.at(i, j), F->mul(aik, o.at(k, j)));
        }
    return r;
}

Mat Mat::scaled(int s) const {
    Mat r = *this;
    for (auto& x : r.a) x = F->mul(s, x);
    return r;
}

Mat Mat::neg() const {
    Mat r = *this;
    for (auto& x : r.a) x = F->neg(x);
    return r;
}

bool Mat::invertible() const {
    if (!square()) return false;
    try {
        inverse();
        return true;
    } catch (const SemanticError&) {
        return false;
    }
}

Mat Mat::inverse() const {
    if (!square()) throw SemanticError("inverse of non-square matrix");
    const int n = rows;
    Mat w = *this;
    Mat inv = identity(F, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (w.at(r, col) != F->zero()) { piv = r; break; }
        if (piv < 0) throw SemanticError("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(w.a[static_cast<std::size_t>(piv) * n + j], w.a[static_cast<std::size_t>(col) * n + j]);
                std::swap(inv.a[static_cast<std::size_t>(piv) * n + j], inv.a[static_cast<std::size_t>(col) * n + j]);
            }
        int s = F->inv(w.at(col, col));
        for (int j = 0; j < n; ++j) {
            w.at(col, j) = F->mul(s, w.at(col, j));
            inv.at(col, j) = F->mul(s, inv.at(col, j));
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int f = w.at(r, col);
            if (f == F->zero()) continue;
            for (int j = 0; j < n; ++j) {
                w.at(r, j) = F->sub(w.at(r, j), F->mul(f, w.at(col, j)));
                inv.at(r, j) = F->sub(inv.at(r, j), F->mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::string Mat::str() const {
    std::string s = "[";
    for (int i = 0; i < rows; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < cols; ++j) {
            if (j) s += ",";
            s += F->elem_str(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace ringlab
