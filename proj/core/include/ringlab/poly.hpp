#pragma once

#include <string>
#include <vector>

#include "ringlab/field.hpp"

namespace ringlab {

/// Polynomial over a Field, coefficients low-degree first, no trailing zero.
/// The zero polynomial has an empty coefficient vector and degree -1.
struct Poly {
    FieldPtr F;
    std::vector<int> c;

    Poly() = default;
    Poly(FieldPtr field, std::vector<int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    bool monic() const { return !c.empty() && c.back() == F->one(); }
    int coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }

    static Poly x_minus(FieldPtr F, int a);  // x - a
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(int s) const;
    Poly rem(const Poly& divisor) const;  // divisor must be monic
    bool divides(const Poly& other) const;
    int eval(int a) const;
    bool operator==(const Poly& o) const { return c == o.c; }

    std::string str() const;
};

/// Irreducibility by exhaustive search over monic factors of degree <= deg/2.
bool poly_irreducible(const Poly& p);

}  // namespace ringlab
