#include "ringlab/module.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ringlab/ringspec.hpp"
#include "ringlab/ringstruct.hpp"

namespace ringlab {

void Module::seal() {
    neg_.assign(size, -1);
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (add(a, b) == 0) neg_[a] = b;
    for (int a = 0; a < size; ++a)
        if (neg_[a] < 0) throw SemanticError("module table: element without additive inverse");
}

ModPtr realize_regular(RingPtr r) {
    auto m = std::make_shared<Module>();
    m->R = r;
    m->size = r->size;
    m->add_tab = r->add_tab;
    m->act_tab = r->mul_tab;
    m->name = "R_R";
    m->seal();
    return m;
}

ModPtr realize_paired(RingPtr triR, const std::vector<Mat>& w, int i) {
    if (!triR->tri) throw SemanticError("realize_paired: ring was not built as tri(...)");
    const TriInfo& t = *triR->tri;
    if (i < 0 || i >= t.n) throw SemanticError("realize_paired: row index out of range");
    const auto& F = t.D;
    const int q = static_cast<int>(F->size());

    std::vector<Mat> ws = w;
    std::sort(ws.begin(), ws.end());
    std::map<std::vector<int>, int> widx;
    for (std::size_t j = 0; j < ws.size(); ++j) widx[ws[j].a] = static_cast<int>(j);
    if (!widx.count(Mat(F, t.n, t.n).a)) throw SemanticError("realize_paired: 0 not in carrier");

    auto m = std::make_shared<Module>();
    m->R = triR;
    m->size = q * static_cast<int>(ws.size());
    m->name = "(D,W)_" + std::to_string(i + 1);
    auto encode = [&](int a, int wi) { return wi * q + a; };
    m->add_tab.assign(static_cast<std::size_t>(m->size) * m->size, 0);
    m->act_tab.assign(static_cast<std::size_t>(m->size) * triR->size, 0);
    for (int x = 0; x < m->size; ++x) {
        int a = x % q, wi = x / q;
        for (int y = 0; y < m->size; ++y) {
            int b = y % q, wj = y / q;
            auto it = widx.find((ws[wi] + ws[wj]).a);
            if (it == widx.end()) throw SemanticError("realize_paired: carrier not additively closed");
            m->add_tab[static_cast<std::size_t>(x) * m->size + y] = encode(F->add(a, b), it->second);
        }
        for (int rcode = 0; rcode < triR->size; ++rcode) {
            int d, ai;
            std::vector<int> col;
            tri_decode(*triR, rcode, d, col, ai);
            const Mat& a1 = t.dprime[ai];
            int val = F->mul(a, d);
            for (int k = 0; k < t.n; ++k) val = F->add(val, F->mul(ws[wi].at(i, k), col[k]));
            auto it = widx.find((ws[wi] * a1).a);
            if (it == widx.end()) throw SemanticError("realize_paired: carrier not closed under the action");
            m->act_tab[static_cast<std::size_t>(x) * triR->size + rcode] = encode(val, it->second);
        }
    }
    m->seal();
    return m;
}

ModPtr submodule_module(ModPtr parent, const Subset& k, const std::string& name) {
    std::map<int, int> index;
    for (std::size_t i = 0; i < k.size(); ++i) index[k[i]] = static_cast<int>(i);
    if (k.empty() || k[0] != 0) throw SemanticError("submodule_module: subset must contain 0 first");
    auto m = std::make_shared<Module>();
    m->R = parent->R;
    m->size = static_cast<int>(k.size());
    m->name = name.empty() ? parent->name + "|sub" + std::to_string(k.size()) : name;
    m->add_tab.assign(static_cast<std::size_t>(m->size) * m->size, 0);
    m->act_tab.assign(static_cast<std::size_t>(m->size) * m->R->size, 0);
    for (int a = 0; a < m->size; ++a) {
        for (int b = 0; b < m->size; ++b) {
            auto it = index.find(parent->add(k[a], k[b]));
            if (it == index.end()) throw SemanticError("submodule_module: subset not closed");
            m->add_tab[static_cast<std::size_t>(a) * m->size + b] = it->second;
        }
        for (int r = 0; r < m->R->size; ++r) {
            auto it = index.find(parent->act(k[a], r));
            if (it == index.end()) throw SemanticError("submodule_module: subset not action-closed");
            m->act_tab[static_cast<std::size_t>(a) * m->R->size + r] = it->second;
        }
    }
    m->seal();
    return m;
}

ModPtr quotient_module(ModPtr parent, const Subset& k, std::vector<int>* proj_out,
                       const std::string& name) {
    std::vector<int> proj(parent->size, -1);
    std::vector<int> reps;
    // cosets in ascending order of least member; the coset of 0 is class 0
    for (int x = 0; x < parent->size; ++x) {
        if (proj[x] >= 0) continue;
        int cls = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int i : k) proj[parent->add(x, i)] = cls;
    }
    auto m = std::make_shared<Module>();
    m->R = parent->R;
    m->size = static_cast<int>(reps.size());
    m->name = name.empty() ? parent->name + "/K" + std::to_string(k.size()) : name;
    m->add_tab.assign(static_cast<std::size_t>(m->size) * m->size, 0);
    m->act_tab.assign(static_cast<std::size_t>(m->size) * m->R->size, 0);
    for (int a = 0; a < m->size; ++a) {
        for (int b = 0; b < m->size; ++b)
            m->add_tab[static_cast<std::size_t>(a) * m->size + b] = proj[parent->add(reps[a], reps[b])];
        for (int r = 0; r < m->R->size; ++r)
            m->act_tab[static_cast<std::size_t>(a) * m->R->size + r] = proj[parent->act(reps[a], r)];
    }
    m->seal();
    if (proj_out) *proj_out = std::move(proj);
    return m;
}

Subset submodule_closure(const Module& m, const std::vector<int>& gens) {
    std::set<int> s{0};
    std::vector<int> work;
    auto push = [&](int x) {
        if (s.insert(x).second) work.push_back(x);
    };
    for (int g : gens) push(g);
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int r = 0; r < m.R->size; ++r) push(m.act(x, r));
        for (int y : std::vector<int>(s.begin(), s.end())) push(m.add(x, y));
    }
    return Subset(s.begin(), s.end());
}

const std::vector<Subset>& enumerate_submodules(const Module& m, const Bounds& bounds) {
    if (m.lattice_cache) return *m.lattice_cache;
    std::set<Subset> subs;
    subs.insert({0});
    for (int x = 1; x < m.size; ++x) subs.insert(submodule_closure(m, {x}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Subset> snapshot(subs.begin(), subs.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> gens = snapshot[i];
                gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
                auto sum = submodule_closure(m, gens);
                if (subs.insert(std::move(sum)).second) grew = true;
                if (static_cast<long long>(subs.size()) > bounds.max_submodules)
                    throw BoundExceeded("enumerate_submodules: lattice exceeds bound");
            }
    }
    std::vector<Subset> out(subs.begin(), subs.end());
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    m.lattice_cache = std::move(out);
    return *m.lattice_cache;
}

namespace {

bool subset_of(const Subset& a, const Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Subset> maximal_submodules(const Module& m, const Bounds& bounds) {
    const auto& lat = enumerate_submodules(m, bounds);
    std::vector<Subset> out;
    for (const auto& k : lat) {
        if (static_cast<int>(k.size()) == m.size) continue;
        bool maximal = true;
        for (const auto& l : lat) {
            if (static_cast<int>(l.size()) == m.size || l.size() <= k.size()) continue;
            if (l != k && subset_of(k, l)) { maximal = false; break; }
        }
        if (maximal) out.push_back(k);
    }
    return out;
}

std::vector<Subset> minimal_submodules(const Module& m, const Bounds& bounds) {
    const auto& lat = enumerate_submodules(m, bounds);
    std::vector<Subset> out;
    for (const auto& k : lat) {
        if (k.size() == 1) continue;
        bool minimal = true;
        for (const auto& l : lat) {
            if (l.size() == 1 || l.size() >= k.size()) continue;
            if (subset_of(l, k)) { minimal = false; break; }
        }
        if (minimal) out.push_back(k);
    }
    return out;
}

const Profile& structure_profile(const Module& m, const Subset& ring_socle, const Bounds& bounds) {
    if (m.profile_cache) return *m.profile_cache;
    Profile p;

    auto minimals = minimal_submodules(m, bounds);
    std::vector<int> soc_gens;
    for (const auto& s : minimals) soc_gens.insert(soc_gens.end(), s.begin(), s.end());
    p.socle = submodule_closure(m, soc_gens);

    // radical = M.J(R), cross-checked against the maximal-submodule intersection
    auto jac = jacobson_radical(*m.R);
    std::vector<int> rad_gens;
    for (int x = 0; x < m.size; ++x)
        for (int j : jac) rad_gens.push_back(m.act(x, j));
    p.radical = submodule_closure(m, rad_gens);
    {
        auto maxes = maximal_submodules(m, bounds);
        std::set<int> inter;
        if (maxes.empty()) {
            for (int x = 0; x < m.size; ++x) inter.insert(x);
        } else {
            inter.insert(maxes[0].begin(), maxes[0].end());
            for (std::size_t i = 1; i < maxes.size(); ++i) {
                std::set<int> next;
                for (int x : maxes[i])
                    if (inter.count(x)) next.insert(x);
                inter = std::move(next);
            }
        }
        Subset inter_v(inter.begin(), inter.end());
        if (inter_v != p.radical)
            throw SemanticError("radical cross-check failed on " + m.name);
        p.local = maxes.size() == 1;
    }

    // Z(M) via the socle-containment essentiality rule
    std::vector<int> z_gens;
    for (int x = 0; x < m.size; ++x) {
        bool kills_socle_implies_ess = true;
        // ann_r(x) is essential iff it contains Soc(R_R)
        for (int s : ring_socle)
            if (m.act(x, s) != 0) { kills_socle_implies_ess = false; break; }
        if (kills_socle_implies_ess) z_gens.push_back(x);
    }
    p.singular = submodule_closure(m, z_gens);
    {
        Subset z_raw(z_gens.begin(), z_gens.end());
        std::sort(z_raw.begin(), z_raw.end());
        if (z_raw != p.singular) throw SemanticError("singular set is not a submodule on " + m.name);
    }

    // composition length: walk a maximal chain in the lattice
    const auto& lat = enumerate_submodules(m, bounds);
    Subset cur{0};
    int len = 0;
    while (static_cast<int>(cur.size()) < m.size) {
        const Subset* next = nullptr;
        for (const auto& l : lat) {
            if (l.size() <= cur.size() || !subset_of(cur, l)) continue;
            if (!next || l.size() < next->size()) next = &l;
        }
        if (!next) throw SemanticError("lattice has no cover; inconsistent state");
        cur = *next;
        ++len;
    }
    p.length = len;
    p.semisimple = static_cast<int>(p.socle.size()) == m.size;

    m.profile_cache = std::move(p);
    return *m.profile_cache;
}

bool is_essential_definitional(const Module& m, const Subset& k, const Bounds& bounds) {
    const auto& lat = enumerate_submodules(m, bounds);
    for (const auto& l : lat) {
        if (l.size() == 1) continue;
        std::vector<int> inter;
        std::set_intersection(k.begin(), k.end(), l.begin(), l.end(), std::back_inserter(inter));
        if (inter.size() <= 1) return false;
    }
    return true;
}

}  // namespace ringlab
