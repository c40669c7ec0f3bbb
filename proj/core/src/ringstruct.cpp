#include "ringlab/ringstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ringlab {

std::vector<int> jacobson_radical(const Ring& r) {
    std::vector<int> jac;
    for (int x = 0; x < r.size; ++x) {
        bool ok = true;
        for (int t = 0; t < r.size && ok; ++t)
            if (!r.is_unit(r.sub(r.one, r.mul(x, t)))) ok = false;
        if (ok) jac.push_back(x);
    }
    return jac;
}

bool radical_is_nilpotent(const Ring& r, const std::vector<int>& jac) {
    std::set<int> cur(jac.begin(), jac.end());
    for (int iter = 0; iter <= r.size; ++iter) {
        if (cur.size() == 1 && cur.count(0)) return true;
        std::set<int> next;
        for (int x : cur)
            for (int y : jac) next.insert(r.mul(x, y));
        if (next == cur) return false;
        cur = std::move(next);
    }
    return false;
}

bool is_local_ring(const Ring& r) {
    // non-units form an additive subgroup
    std::vector<int> nonunits;
    for (int x = 0; x < r.size; ++x)
        if (!r.is_unit(x)) nonunits.push_back(x);
    for (int x : nonunits)
        for (int y : nonunits)
            if (r.is_unit(r.add(x, y))) return false;
    return true;
}

bool is_commutative(const Ring& r) {
    for (int x = 0; x < r.size; ++x)
        for (int y = x + 1; y < r.size; ++y)
            if (r.mul(x, y) != r.mul(y, x)) return false;
    return true;
}

bool is_semisimple_ring(const Ring& r) {
    auto jac = jacobson_radical(r);
    return jac.size() == 1 && jac[0] == 0;
}

std::vector<int> two_sided_ideal_closure(const Ring& r, const std::vector<int>& gens) {
    std::set<int> s{0};
    std::vector<int> work;
    auto push = [&](int x) {
        if (s.insert(x).second) work.push_back(x);
    };
    for (int g : gens) push(g);
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int t = 0; t < r.size; ++t) {
            push(r.mul(t, x));
            push(r.mul(x, t));
        }
        for (int y : std::vector<int>(s.begin(), s.end())) push(r.add(x, y));
    }
    return std::vector<int>(s.begin(), s.end());
}

RadicalIdeals ideals_within_radical(const Ring& r, const Bounds& bounds) {
    auto jac = jacobson_radical(r);
    std::set<int> jset(jac.begin(), jac.end());
    auto inside = [&](const std::vector<int>& ideal) {
        return std::all_of(ideal.begin(), ideal.end(), [&](int x) { return jset.count(x) > 0; });
    };
    // cyclic ideals from each element of J, then pairwise sums to a fixed point
    std::set<std::vector<int>> ideals;
    ideals.insert({0});
    for (int x : jac) {
        auto ideal = two_sided_ideal_closure(r, {x});
        if (inside(ideal)) ideals.insert(std::move(ideal));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(ideals.begin(), ideals.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> gens = snapshot[i];
                gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
                auto sum = two_sided_ideal_closure(r, gens);
                if (inside(sum) && ideals.insert(sum).second) grew = true;
                if (static_cast<long long>(ideals.size()) > bounds.max_submodules)
                    throw BoundExceeded("ideals_within_radical: ideal count exceeds bound");
            }
    }
    RadicalIdeals out;
    out.ideals.assign(ideals.begin(), ideals.end());
    std::sort(out.ideals.begin(), out.ideals.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    out.radical_properly_contains_nonzero_ideal = false;
    for (const auto& ideal : out.ideals)
        if (ideal.size() > 1 && ideal.size() < jac.size())
            out.radical_properly_contains_nonzero_ideal = true;
    return out;
}

std::vector<int> all_idempotents(const Ring& r) {
    std::vector<int> out;
    for (int x = 0; x < r.size; ++x)
        if (r.mul(x, x) == x) out.push_back(x);
    return out;
}

std::vector<int> central_idempotents(const Ring& r) {
    std::vector<int> out;
    for (int e : all_idempotents(r)) {
        bool central = true;
        for (int x = 0; x < r.size && central; ++x)
            if (r.mul(e, x) != r.mul(x, e)) central = false;
        if (central) out.push_back(e);
    }
    return out;
}

std::vector<int> primitive_orthogonal_idempotents(const Ring& r) {
    auto idems = all_idempotents(r);
    auto leq = [&](int f, int e) { return r.mul(e, f) == f && r.mul(f, e) == f; };
    std::vector<int> out;
    int rest = r.one;
    while (rest != 0) {
        // minimal nonzero idempotent below rest is primitive
        int pick = -1;
        for (int e : idems) {
            if (e == 0 || !leq(e, rest)) continue;
            if (pick < 0 || (leq(e, pick) && e != pick)) pick = e;
        }
        // refine to a genuinely minimal one
        bool changed = true;
        while (changed) {
            changed = false;
            for (int e : idems)
                if (e != 0 && e != pick && leq(e, pick)) {
                    pick = e;
                    changed = true;
                }
        }
        out.push_back(pick);
        rest = r.sub(rest, pick);
        if (r.mul(rest, rest) != rest)
            throw SemanticError("idempotent decomposition: remainder not idempotent");
    }
    return out;
}

SubringView corner_ring(const Ring& r, const std::vector<int>& carrier, int one_elt,
                        const std::string& recipe) {
    std::map<int, int> index;
    for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = static_cast<int>(i);
    if (carrier.empty() || carrier[0] != 0) throw SemanticError("corner_ring: carrier must start at 0");
    auto ring = std::make_shared<Ring>();
    ring->size = static_cast<int>(carrier.size());
    ring->one = index.at(one_elt);
    ring->recipe = recipe;
    ring->add_tab.assign(static_cast<std::size_t>(ring->size) * ring->size, 0);
    ring->mul_tab.assign(static_cast<std::size_t>(ring->size) * ring->size, 0);
    for (int a = 0; a < ring->size; ++a)
        for (int b = 0; b < ring->size; ++b) {
            auto it_add = index.find(r.add(carrier[a], carrier[b]));
            auto it_mul = index.find(r.mul(carrier[a], carrier[b]));
            if (it_add == index.end() || it_mul == index.end())
                throw SemanticError("corner_ring: carrier not closed");
            ring->add_tab[static_cast<std::size_t>(a) * ring->size + b] = it_add->second;
            ring->mul_tab[static_cast<std::size_t>(a) * ring->size + b] = it_mul->second;
        }
    ring->seal();
    return {ring, carrier};
}

Decomposition decompose_ring(const Ring& r, const Bounds&) {
    auto cents = central_idempotents(r);
    auto leq = [&](int f, int e) { return r.mul(e, f) == f; };
    std::vector<int> atoms;
    for (int e : cents) {
        if (e == 0) continue;
        bool primitive = true;
        for (int f : cents)
            if (f != 0 && f != e && leq(f, e)) { primitive = false; break; }
        if (primitive) atoms.push_back(e);
    }
    Decomposition out;
    for (std::size_t idx = 0; idx < atoms.size(); ++idx) {
        int e = atoms[idx];
        std::set<int> carrier;
        for (int x = 0; x < r.size; ++x) carrier.insert(r.mul(e, x));
        auto view = corner_ring(r, std::vector<int>(carrier.begin(), carrier.end()), e,
                                r.recipe + "@e" + std::to_string(e));
        RingFactor f;
        f.ring = view.ring;
        f.carrier = view.carrier;
        f.idempotent = e;
        f.semisimple = is_semisimple_ring(*view.ring);
        (f.semisimple ? out.semisimple_factors : out.other_factors).push_back(out.factors.size());
        out.factors.push_back(std::move(f));
    }
    return out;
}

RingQuotient quotient_ring(const Ring& r, const std::vector<int>& ideal) {
    std::set<int> iset(ideal.begin(), ideal.end());
    std::vector<int> proj(r.size, -1);
    std::vector<int> reps;
    for (int x = 0; x < r.size; ++x) {
        if (proj[x] >= 0) continue;
        int cls = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int i : ideal) proj[r.add(x, i)] = cls;
    }
    // class 0 must be the coset of 0
    if (proj[0] != 0) {
        int z = proj[0];
        std::swap(reps[0], reps[z]);
        for (auto& p : proj) {
            if (p == 0) p = z;
            else if (p == z) p = 0;
        }
    }
    auto q = std::make_shared<Ring>();
    q->size = static_cast<int>(reps.size());
    q->one = proj[r.one];
    q->recipe = r.recipe + "/I" + std::to_string(ideal.size());
    q->add_tab.assign(static_cast<std::size_t>(q->size) * q->size, 0);
    q->mul_tab.assign(static_cast<std::size_t>(q->size) * q->size, 0);
    for (int a = 0; a < q->size; ++a)
        for (int b = 0; b < q->size; ++b) {
            q->add_tab[static_cast<std::size_t>(a) * q->size + b] = proj[r.add(reps[a], reps[b])];
            q->mul_tab[static_cast<std::size_t>(a) * q->size + b] = proj[r.mul(reps[a], reps[b])];
        }
    q->seal();
    return {q, proj};
}

RingPtr opposite_ring(const Ring& r) {
    auto o = std::make_shared<Ring>();
    o->size = r.size;
    o->one = r.one;
    o->recipe = "op(" + r.recipe + ")";
    o->add_tab = r.add_tab;
    o->mul_tab.assign(static_cast<std::size_t>(r.size) * r.size, 0);
    for (int a = 0; a < r.size; ++a)
        for (int b = 0; b < r.size; ++b)
            o->mul_tab[static_cast<std::size_t>(a) * r.size + b] = r.mul(b, a);
    o->seal();
    return o;
}

}  // namespace ringlab
