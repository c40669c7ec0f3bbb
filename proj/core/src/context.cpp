#include "ringlab/context.hpp"

#include <algorithm>

namespace ringlab {

ModPtr RingCtx::regular() {
    if (!regular_) regular_ = realize_regular(R);
    return regular_;
}

const std::vector<Subset>& RingCtx::regular_lattice() {
    return enumerate_submodules(*regular(), bounds);
}

const Subset& RingCtx::right_socle() {
    if (!socle_) {
        std::vector<int> gens;
        for (const auto& s : minimal_submodules(*regular(), bounds))
            gens.insert(gens.end(), s.begin(), s.end());
        socle_ = submodule_closure(*regular(), gens);
    }
    return *socle_;
}

const Subset& RingCtx::radical() {
    if (!radical_) radical_ = jacobson_radical(*R);
    return *radical_;
}

bool RingCtx::semisimple() {
    const auto& j = radical();
    return j.size() == 1 && j[0] == 0;
}

const Profile& RingCtx::profile(const ModPtr& m) {
    return structure_profile(*m, right_socle(), bounds);
}

bool RingCtx::isomorphic(const ModPtr& a, const ModPtr& b) {
    return is_isomorphic(a, b, right_socle(), bounds);
}

const std::vector<SimpleInfo>& RingCtx::simples() {
    if (simples_) return *simples_;
    std::vector<SimpleInfo> out;
    for (const auto& k : maximal_submodules(*regular(), bounds)) {
        auto q = quotient_module(regular(), k, nullptr, "R/m" + std::to_string(k.size()));
        bool dup = false;
        for (const auto& s : out)
            if (isomorphic(s.mod, q)) { dup = true; break; }
        if (!dup) out.push_back(SimpleInfo{q, k, false});
    }
    // projectivity: isomorphic to a simple eR
    for (int e : all_idempotents(*R)) {
        if (e == 0) continue;
        std::vector<int> er;
        for (int x = 0; x < R->size; ++x) er.push_back(R->mul(e, x));
        std::sort(er.begin(), er.end());
        er.erase(std::unique(er.begin(), er.end()), er.end());
        auto sub = submodule_module(regular(), er, "eR");
        if (enumerate_submodules(*sub, bounds).size() != 2) continue;  // want simple eR
        for (auto& s : out)
            if (!s.projective && isomorphic(s.mod, sub)) s.projective = true;
    }
    std::sort(out.begin(), out.end(), [](const SimpleInfo& a, const SimpleInfo& b) {
        return a.max_ideal < b.max_ideal;
    });
    simples_ = std::move(out);
    return *simples_;
}

const std::vector<ModPtr>& RingCtx::length_two_locals() {
    if (l2locals_) return *l2locals_;
    std::vector<ModPtr> out;
    // every local module is cyclic, hence a quotient of R_R
    for (const auto& k : regular_lattice()) {
        if (static_cast<int>(k.size()) == R->size) continue;
        auto q = quotient_module(regular(), k, nullptr,
                                 "R/K" + std::to_string(k.size()));
        // local of length two <=> the submodule lattice is a 3-chain
        if (enumerate_submodules(*q, bounds).size() != 3) continue;
        bool dup = false;
        for (const auto& m : out)
            if (isomorphic(m, q)) { dup = true; break; }
        if (!dup) out.push_back(q);
    }
    l2locals_ = std::move(out);
    return *l2locals_;
}

}  // namespace ringlab
