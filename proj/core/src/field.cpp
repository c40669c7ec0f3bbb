#include "ringlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ringlab {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

using Zx = std::vector<int>;  // polynomial over GF(p), low-degree first

Zx trim(Zx a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Zx mul_mod_p(const Zx& a, const Zx& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Zx c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + 1LL * a[i] * b[j]) % p);
    return trim(c);
}

// remainder of a by monic b
Zx rem_mod_p(Zx a, const Zx& b, long long p) {
    a = trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da];
        if (lead != 0) {
            for (int i = 0; i <= db; ++i) {
                long long v = a[da - db + i] - 1LL * lead * b[i];
                a[da - db + i] = static_cast<int>(((v % p) + p) % p);
            }
        }
        a.pop_back();
        a = trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Exhaustive trial division by monic factors of degree <= deg/2.
bool irreducible_mod_p(const Zx& f, long long p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            Zx g(dd + 1, 0);
            long long c = code;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[dd] = 1;
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

long long gcdll(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

struct Field::RatPool {
    std::vector<std::pair<long long, long long>> vals;  // reduced, den > 0
    std::map<std::pair<long long, long long>, int> index;
    int intern(long long num, long long den) {
        if (den == 0) throw SemanticError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = gcdll(num, den);
        if (g > 1) { num /= g; den /= g; }
        auto key = std::make_pair(num, den);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(vals.size());
        vals.push_back(key);
        index.emplace(key, id);
        return id;
    }
};

FieldPtr Field::gf(long long p, int k, const Bounds& bounds) {
    if (!is_prime(p)) throw SemanticError("gf: " + std::to_string(p) + " is not prime");
    if (k < 1) throw SemanticError("gf: degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > bounds.max_field_size)
            throw BoundExceeded("gf(" + std::to_string(p) + "," + std::to_string(k) +
                                ") exceeds field size bound " + std::to_string(bounds.max_field_size));
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->finite_ = true;
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;

    if (k > 1) {
        // least monic irreducible of degree k, ordering by the base-p encoding
        // of the non-leading coefficients (lexicographic from the constant up)
        long long count = q;  // p^k choices for lower coefficients
        bool found = false;
        for (long long code = 0; code < count && !found; ++code) {
            Zx g(k + 1, 0);
            long long c = code;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[k] = 1;
            if (irreducible_mod_p(g, p)) {
                f->def_poly_ = g;
                found = true;
            }
        }
        if (!found) throw SemanticError("no irreducible polynomial found");  // unreachable
    }

    auto decode = [&](long long e) {
        Zx v(k, 0);
        for (int i = 0; i < k; ++i) { v[i] = static_cast<int>(e % p); e /= p; }
        return trim(v);
    };
    auto encode = [&](const Zx& v) {
        long long e = 0;
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) e = e * p + v[i];
        return static_cast<int>(e);
    };

    f->add_tab_.assign(q * q, 0);
    f->mul_tab_.assign(q * q, 0);
    f->neg_tab_.assign(q, 0);
    f->inv_tab_.assign(q, -1);
    for (long long a = 0; a < q; ++a) {
        Zx va = decode(a);
        Zx na(va.size());
        for (std::size_t i = 0; i < va.size(); ++i) na[i] = static_cast<int>((p - va[i]) % p);
        f->neg_tab_[a] = encode(trim(na));
        for (long long b = 0; b < q; ++b) {
            Zx vb = decode(b);
            Zx s(std::max(va.size(), vb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                int x = i < va.size() ? va[i] : 0;
                int y = i < vb.size() ? vb[i] : 0;
                s[i] = static_cast<int>((x + y) % p);
            }
            f->add_tab_[a * q + b] = encode(trim(s));
            Zx m = mul_mod_p(va, vb, p);
            if (k > 1) m = rem_mod_p(m, f->def_poly_, p);
            f->mul_tab_[a * q + b] = encode(m);
        }
    }
    for (long long a = 1; a < q; ++a)
        for (long long b = 1; b < q; ++b)
            if (f->mul_tab_[a * q + b] == 1) f->inv_tab_[a] = static_cast<int>(b);
    for (long long a = 1; a < q; ++a)
        if (f->inv_tab_[a] < 0) throw SemanticError("field construction: missing inverse");
    return f;
}

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->finite_ = false;
    f->p_ = 0;
    f->k_ = 1;
    f->pool_ = std::make_shared<RatPool>();
    f->pool_->intern(0, 1);  // handle 0
    f->pool_->intern(1, 1);  // handle 1
    return f;
}

int Field::add(int a, int b) const {
    if (finite_) return add_tab_[static_cast<long long>(a) * q_ + b];
    auto [an, ad] = pool_->vals[a];
    auto [bn, bd] = pool_->vals[b];
    return pool_->intern(an * bd + bn * ad, ad * bd);
}

int Field::neg(int a) const {
    if (finite_) return neg_tab_[a];
    auto [an, ad] = pool_->vals[a];
    return pool_->intern(-an, ad);
}

int Field::mul(int a, int b) const {
    if (finite_) return mul_tab_[static_cast<long long>(a) * q_ + b];
    auto [an, ad] = pool_->vals[a];
    auto [bn, bd] = pool_->vals[b];
    return pool_->intern(an * bn, ad * bd);
}

int Field::inv(int a) const {
    if (a == 0) throw SemanticError("division by zero");
    if (finite_) return inv_tab_[a];
    auto [an, ad] = pool_->vals[a];
    return pool_->intern(ad, an);
}

int Field::rat(long long num, long long den) const {
    if (finite_) throw SemanticError("rat() on a finite field");
    return pool_->intern(num, den);
}

std::pair<long long, long long> Field::rat_value(int a) const { return pool_->vals[a]; }

int Field::from_int(long long n) const {
    if (!finite_) return pool_->intern(n, 1);
    long long r = ((n % p_) + p_) % p_;
    int e = 0;
    for (long long i = 0; i < r; ++i) e = add(e, 1);
    return e;
}

std::string Field::name() const {
    if (!finite_) return "q";
    return "gf(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
}

std::string Field::elem_str(int a) const {
    if (finite_) return std::to_string(a);
    auto [n, d] = pool_->vals[a];
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
}

}  // namespace ringlab
