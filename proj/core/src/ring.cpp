#include "ringlab/ring.hpp"

#include <random>

namespace ringlab {

void Ring::seal() {
    neg_.assign(size, -1);
    units_.assign(size, 0);
    unit_list_.clear();
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (add(a, b) == 0) neg_[a] = b;
    for (int a = 0; a < size; ++a) {
        if (neg_[a] < 0) throw SemanticError("ring table: element without additive inverse");
        for (int b = 0; b < size; ++b)
            if (mul(a, b) == one && mul(b, a) == one) {
                units_[a] = 1;
                break;
            }
        if (units_[a]) unit_list_.push_back(a);
    }
}

std::optional<LawViolation> verify_ring_axioms(const Ring& r, VerifyMode mode,
                                               const Bounds& bounds) {
    const int n = r.size;
    for (int x = 0; x < n; ++x) {
        if (r.mul(r.one, x) != x || r.mul(x, r.one) != x) return LawViolation{"identity", x, x, x};
        if (r.add(0, x) != x) return LawViolation{"zero", x, x, x};
    }
    auto check = [&](int x, int y, int z) -> std::optional<LawViolation> {
        if (r.add(x, y) != r.add(y, x)) return LawViolation{"add-commutativity", x, y, z};
        if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) return LawViolation{"add-associativity", x, y, z};
        if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) return LawViolation{"mul-associativity", x, y, z};
        if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)))
            return LawViolation{"left-distributivity", x, y, z};
        if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z)))
            return LawViolation{"right-distributivity", x, y, z};
        return std::nullopt;
    };
    if (mode == VerifyMode::Full) {
        if (n > 64) throw BoundExceeded("verify_ring_axioms: full mode requires size <= 64");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (auto v = check(x, y, z)) return v;
    } else {
        std::mt19937_64 rng(bounds.seed);
        std::uniform_int_distribution<int> dist(0, n - 1);
        for (long long i = 0; i < bounds.sample_triples; ++i)
            if (auto v = check(dist(rng), dist(rng), dist(rng))) return v;
    }
    return std::nullopt;
}

}  // namespace ringlab
