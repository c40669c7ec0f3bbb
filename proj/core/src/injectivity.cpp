#include "ringlab/injectivity.hpp"

#include <algorithm>
#include <set>

namespace ringlab {

const char* to_string(ModClass c) {
    switch (c) {
        case ModClass::Injective: return "injective";
        case ModClass::Poor: return "poor";
        case ModClass::Middle: return "middle";
    }
    return "?";
}

bool relatively_injective(RingCtx& ctx, ModPtr m, ModPtr n, ExtensionFailure* fail) {
    long long used = 0;
    auto homs_nm = hom_enumerate(n, m, ctx.bounds, &used);

    const auto& lattice = enumerate_submodules(*n, ctx.bounds);
    bool ok = true;
    for (const auto& k : lattice) {
        if (k.size() <= 1 || static_cast<int>(k.size()) == n->size) continue;  // trivial extensions
        // restrictions of the full maps to K, as value vectors over K's positions
        std::set<std::vector<int>> restrictions;
        for (const auto& g : homs_nm) {
            std::vector<int> r(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) r[i] = g.val[k[i]];
            restrictions.insert(std::move(r));
        }
        auto kmod = submodule_module(n, k);
        auto homs_km = hom_enumerate(kmod, m, ctx.bounds, &used);
        for (const auto& f : homs_km) {
            if (restrictions.count(f.val)) continue;
            ok = false;
            if (fail) {
                fail->test_module = n->name;
                fail->submodule = k;
                fail->map_vals = f.val;
                fail->candidates_examined = used;
            }
            break;
        }
        if (!ok) break;
    }
    ctx.hom_candidates_used += used;
    return ok;
}

bool is_injective(RingCtx& ctx, ModPtr m, ExtensionFailure* fail) {
    return relatively_injective(ctx, m, ctx.regular(), fail);
}

bool is_poor(RingCtx& ctx, ModPtr m) {
    for (const auto& n : ctx.length_two_locals())
        if (relatively_injective(ctx, m, n)) return false;
    return true;  // vacuously poor when no local length-two module exists
}

ModClass classify_module(RingCtx& ctx, ModPtr m, InjectivityProfile* profile,
                         ExtensionFailure* fail) {
    InjectivityProfile local;
    InjectivityProfile& p = profile ? *profile : local;
    p = {};
    p.semisimple_ring = ctx.semisimple();

    p.injective = is_injective(ctx, m, fail);
    p.verdicts.emplace_back(ctx.regular()->name, p.injective);
    p.poor = true;
    for (const auto& n : ctx.length_two_locals()) {
        bool v = relatively_injective(ctx, m, n);
        p.verdicts.emplace_back(n->name, v);
        if (v) p.poor = false;
    }
    // over a semisimple ring every module is injective and the poorness test
    // set is empty; report the injective verdict
    if (p.injective) return ModClass::Injective;
    if (p.poor) return ModClass::Poor;
    return ModClass::Middle;
}

WitnessSearch middle_witness_search(RingCtx& ctx, long long size_bound) {
    WitnessSearch out;
    if (ctx.semisimple()) return out;

    // candidate list: cyclic modules R/K, then all their submodules
    std::vector<ModPtr> candidates;
    std::vector<Subset> lattice = ctx.regular_lattice();
    std::stable_sort(lattice.begin(), lattice.end(),
                     [](const Subset& a, const Subset& b) { return a.size() > b.size(); });
    for (const auto& k : lattice) {
        long long qsize = ctx.R->size / static_cast<long long>(k.size());
        if (qsize <= 1 || qsize > size_bound) continue;
        candidates.push_back(quotient_module(ctx.regular(), k, nullptr,
                                             "R/K" + std::to_string(k.size())));
    }
    std::size_t n_cyclic = candidates.size();
    for (std::size_t i = 0; i < n_cyclic; ++i) {
        const auto& lat = enumerate_submodules(*candidates[i], ctx.bounds);
        for (const auto& s : lat) {
            if (s.size() <= 1 || static_cast<int>(s.size()) == candidates[i]->size) continue;
            if (static_cast<long long>(s.size()) > size_bound) continue;
            candidates.push_back(submodule_module(candidates[i],
                                                  s, candidates[i]->name + " sub" +
                                                         std::to_string(s.size())));
        }
    }

    std::vector<ModPtr> seen;
    for (const auto& cand : candidates) {
        bool dup = false;
        for (const auto& s : seen)
            if (ctx.isomorphic(s, cand)) { dup = true; break; }
        if (dup) continue;
        seen.push_back(cand);
        ++out.modules_scanned;

        InjectivityProfile profile;
        ExtensionFailure failure;
        if (classify_module(ctx, cand, &profile, &failure) != ModClass::Middle) continue;

        MiddleWitness w;
        w.module = cand;
        w.profile = profile;
        w.failure = failure;
        for (const auto& [name, v] : profile.verdicts)
            if (v && name != ctx.regular()->name) { w.nonsemisimple_domain_member = name; break; }
        out.witness = std::move(w);
        break;
    }
    return out;
}

SimpleMiddleClassResult has_no_simple_middle_class(RingCtx& ctx) {
    SimpleMiddleClassResult out;
    for (const auto& s : ctx.simples()) {
        SimpleClassification sc;
        sc.mod = s.mod;
        sc.projective = s.projective;
        sc.cls = classify_module(ctx, s.mod);
        if (sc.cls == ModClass::Middle) out.no_simple_middle_class = false;
        out.per_simple.push_back(std::move(sc));
    }
    return out;
}

}  // namespace ringlab
