#include "ringlab/poly.hpp"

#include <algorithm>

namespace ringlab {

Poly::Poly(FieldPtr field, std::vector<int> coeffs) : F(std::move(field)), c(std::move(coeffs)) {
    while (!c.empty() && c.back() == F->zero()) c.pop_back();
}

Poly Poly::x_minus(FieldPtr F, int a) {
    return Poly(F, {F->neg(a), F->one()});
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<int> r(std::max(c.size(), o.c.size()), F->zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(F->neg(F->one())); }

Poly Poly::operator*(const Poly& o) const {
    if (zero() || o.zero()) return Poly(F, {});
    std::vector<int> r(c.size() + o.c.size() - 1, F->zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j)
            r[i + j] = F->add(r[i + j], F->mul(c[i], o.c[j]));
    return Poly(F, std::move(r));
}

Poly Poly::scaled(int s) const {
    std::vector<int> r(c);
    for (auto& x : r) x = F->mul(x, s);
    return Poly(F, std::move(r));
}

Poly Poly::rem(const Poly& d) const {
    if (!d.monic()) throw SemanticError("poly rem: divisor must be monic");
    std::vector<int> r(c);
    const int dd = d.degree();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        int da = static_cast<int>(r.size()) - 1;
        int lead = r[da];
        if (lead != F->zero())
            for (int i = 0; i <= dd; ++i)
                r[da - dd + i] = F->sub(r[da - dd + i], F->mul(lead, d.c[i]));
        r.pop_back();
        while (!r.empty() && r.back() == F->zero()) r.pop_back();
    }
    return Poly(F, std::move(r));
}

bool Poly::divides(const Poly& other) const { return other.rem(*this).zero(); }

int Poly::eval(int a) const {
    int acc = F->zero();
    for (int i = degree(); i >= 0; --i) acc = F->add(F->mul(acc, a), c[i]);
    return acc;
}

std::string Poly::str() const {
    if (zero()) return "0";
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
        if (i) s += " + ";
        s += F->elem_str(c[i]) + "*x^" + std::to_string(i);
    }
    return s;
}

bool poly_irreducible(const Poly& p) {
    if (!p.F->finite()) throw SemanticError("poly_irreducible: finite coefficient field required");
    if (!p.monic()) throw SemanticError("poly_irreducible: monic polynomial required");
    const int d = p.degree();
    if (d < 1) throw SemanticError("poly_irreducible: degree >= 1 required");
    const long long q = p.F->size();
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= q;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(dd + 1, 0);
            long long cc = code;
            for (int i = 0; i < dd; ++i) { g[i] = static_cast<int>(cc % q); cc /= q; }
            g[dd] = p.F->one();
            if (Poly(p.F, g).divides(p)) return false;
        }
    }
    return true;
}

}  // namespace ringlab
