#pragma once

#include <string>
#include <vector>

#include "ringlab/field.hpp"

namespace ringlab {

/// Dense matrix over a Field, row-major element handles.
struct Mat {
    FieldPtr F;
    int rows = 0, cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(FieldPtr field, int r, int c)
        : F(std::move(field)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    Mat(FieldPtr field, int r, int c, std::vector<int> entries);

    static Mat identity(FieldPtr F, int n);
    static Mat scalar(FieldPtr F, int n, int s);

    int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    std::vector<int> row(int i) const;

    bool square() const { return rows == cols; }
    bool is_zero() const;
    bool is_scalar() const;
    bool lower_triangular() const;
    bool upper_triangular() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(int s) const;
    Mat neg() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator<(const Mat& o) const { return a < o.a; }  // same-shape canonical order

    bool invertible() const;
    Mat inverse() const;  // throws SemanticError if singular

    std::string str() const;
};

}  // namespace ringlab
