#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/config.hpp"

namespace ringlab {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact scalar domain: GF(p^k) with tabulated arithmetic, or the rationals
/// with interned reduced fractions. Elements are small integer handles; for
/// GF(p^k) the handle of c0 + c1*x + ... + c_{k-1}*x^{k-1} is
/// c0 + c1*p + ... + c_{k-1}*p^{k-1}, so 0 and 1 are the ring constants.
class Field {
public:
    static FieldPtr gf(long long p, int k, const Bounds& bounds = {});
    static FieldPtr rationals();

    bool finite() const { return finite_; }
    long long characteristic() const { return p_; }
    int degree() const { return k_; }
    long long size() const { return q_; }  // finite fields only
    // Defining polynomial over GF(p), monic of degree k (k > 1 only),
    // coefficients low-degree first.
    const std::vector<int>& defining_poly() const { return def_poly_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;  // throws SemanticError on zero

    /// Handle of the rational p/q (rationals field only).
    int rat(long long num, long long den) const;
    std::pair<long long, long long> rat_value(int a) const;

    /// Handle of n * 1 (works in both modes).
    int from_int(long long n) const;

    std::string name() const;  // "gf(p,k)" or "q"
    std::string elem_str(int a) const;

private:
    Field() = default;
    bool finite_ = true;
    long long p_ = 0;
    int k_ = 1;
    long long q_ = 0;
    std::vector<int> def_poly_;
    std::vector<int> add_tab_, mul_tab_, inv_tab_, neg_tab_;

    // Rational interning; grows on demand, so mutable behind a const facade.
    struct RatPool;
    std::shared_ptr<RatPool> pool_;
};

bool is_prime(long long n);

}  // namespace ringlab
