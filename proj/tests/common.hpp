#pragma once

// Shared fixtures for the test suites: the ring fleet and small module
// constructions used across files.

#include <algorithm>
#include <string>
#include <vector>

#include "ringlab/criteria.hpp"
#include "ringlab/injectivity.hpp"

namespace ringlab::testing {

inline const std::vector<std::string>& fleet_specs() {
    static const std::vector<std::string> specs = {
        "zmod(4)",
        "zmod(6)",
        "zmod(8)",
        "zmod(12)",
        "gf(2)",
        "gf(2,2)",
        "prod(gf(2),zmod(4))",
        "prod(zmod(4),zmod(4))",
        "trimat(zmod(4),zmod(2))",
        "idealize(gf(2),2)",
        "tri(gf(2);1;full)",
        "tri(gf(2);2;scalars)",
        "tri(gf(2);2;companion[1,1,1])",
    };
    return specs;
}

inline const std::vector<std::string>& tri_fleet_specs() {
    static const std::vector<std::string> specs = {
        "tri(gf(2);1;full)",
        "tri(gf(2);2;scalars)",
        "tri(gf(2);2;companion[1,1,1])",
        "tri(gf(3);2;gen[[1,2],[1,1]])",
    };
    return specs;
}

inline RingPtr build(const std::string& spec, const Bounds& bounds = {}) {
    return build_ring(parse_spec(spec), bounds);
}

/// External direct sum of two modules over the same ring;
/// element (x, y) encoded as x + y * a->size.
inline ModPtr direct_sum(const ModPtr& a, const ModPtr& b) {
    if (a->R != b->R) throw SemanticError("direct_sum: different rings");
    auto m = std::make_shared<Module>();
    m->R = a->R;
    m->size = a->size * b->size;
    m->name = a->name + "+" + b->name;
    m->add_tab.assign(static_cast<std::size_t>(m->size) * m->size, 0);
    m->act_tab.assign(static_cast<std::size_t>(m->size) * m->R->size, 0);
    for (int x = 0; x < m->size; ++x) {
        int xa = x % a->size, xb = x / a->size;
        for (int y = 0; y < m->size; ++y) {
            int ya = y % a->size, yb = y / a->size;
            m->add_tab[static_cast<std::size_t>(x) * m->size + y] =
                a->add(xa, ya) + b->add(xb, yb) * a->size;
        }
        for (int r = 0; r < m->R->size; ++r)
            m->act_tab[static_cast<std::size_t>(x) * m->R->size + r] =
                a->act(xa, r) + b->act(xb, r) * a->size;
    }
    m->seal();
    return m;
}

/// All cyclic quotients R/K of the regular module, ascending carrier size.
inline std::vector<ModPtr> cyclic_modules(RingCtx& ctx, int max_size = 1 << 20) {
    std::vector<ModPtr> out;
    auto lattice = ctx.regular_lattice();
    std::stable_sort(lattice.begin(), lattice.end(),
                     [](const Subset& x, const Subset& y) { return x.size() > y.size(); });
    for (const auto& k : lattice) {
        int qsize = ctx.R->size / static_cast<int>(k.size());
        if (qsize < 1 || qsize > max_size) continue;
        out.push_back(quotient_module(ctx.regular(), k, nullptr,
                                      "R/K" + std::to_string(k.size())));
    }
    return out;
}

/// All two-sided ideals: cyclic two-sided closures plus pairwise sums to a
/// fixed point.
inline std::vector<Subset> all_two_sided_ideals(const Ring& r) {
    std::vector<Subset> found{{0}};
    auto push = [&](const Subset& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
    };
    for (int x = 0; x < r.size; ++x) push(two_sided_ideal_closure(r, {x}));
    for (bool grew = true; grew;) {
        grew = false;
        std::size_t n = found.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                std::vector<int> gens = found[a];
                gens.insert(gens.end(), found[b].begin(), found[b].end());
                auto sum = two_sided_ideal_closure(r, gens);
                if (std::find(found.begin(), found.end(), sum) == found.end()) {
                    found.push_back(sum);
                    grew = true;
                }
            }
    }
    std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return found;
}

}  // namespace ringlab::testing
