#include "ringlab/hom.hpp"

#include <algorithm>

namespace ringlab {

bool ModuleMap::additive_and_equivariant() const {
    for (int x = 0; x < dom->size; ++x) {
        for (int y = 0; y < dom->size; ++y)
            if (val[dom->add(x, y)] != cod->add(val[x], val[y])) return false;
        for (int r = 0; r < dom->R->size; ++r)
            if (val[dom->act(x, r)] != cod->act(val[x], r)) return false;
    }
    return true;
}

bool ModuleMap::bijective() const {
    if (dom->size != cod->size) return false;
    std::vector<char> hit(cod->size, 0);
    for (int v : val) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

const std::vector<int>& greedy_generators(const Module& m) {
    if (m.gens_cache) return *m.gens_cache;
    std::vector<int> gens;
    Subset covered{0};
    while (static_cast<int>(covered.size()) < m.size) {
        int best = -1;
        std::size_t best_size = 0;
        for (int x = 0; x < m.size; ++x) {
            if (std::binary_search(covered.begin(), covered.end(), x)) continue;
            auto cyc = submodule_closure(m, {x});
            if (cyc.size() > best_size) {
                best = x;
                best_size = cyc.size();
            }
        }
        gens.push_back(best);
        std::vector<int> all = gens;
        all.insert(all.end(), covered.begin(), covered.end());
        covered = submodule_closure(m, all);
    }
    m.gens_cache = std::move(gens);
    return *m.gens_cache;
}

namespace {

// Backtracking propagation state shared by hom enumeration and the
// bijection search.
class HomSearch {
public:
    HomSearch(const Module& d, const Module& c, bool injective_only)
        : d_(d), c_(c), injective_(injective_only), val_(d.size, -1), used_(c.size, 0) {}

    // returns false on conflict; on success, callers undo via rollback(mark())
    bool assign(int x, int v) {
        std::vector<std::pair<int, int>> todo{{x, v}};
        while (!todo.empty()) {
            auto [a, w] = todo.back();
            todo.pop_back();
            if (val_[a] >= 0) {
                if (val_[a] != w) return false;
                continue;
            }
            if (injective_ && used_[w]) return false;
            val_[a] = w;
            used_[w] += 1;
            trail_.push_back(a);
            for (int r = 0; r < d_.R->size; ++r) todo.emplace_back(d_.act(a, r), c_.act(w, r));
            for (int b : trail_) todo.emplace_back(d_.add(a, b), c_.add(w, val_[b]));
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }
    void rollback(std::size_t m) {
        while (trail_.size() > m) {
            int a = trail_.back();
            trail_.pop_back();
            used_[val_[a]] -= 1;
            val_[a] = -1;
        }
    }
    bool total() const {
        return std::none_of(val_.begin(), val_.end(), [](int v) { return v < 0; });
    }
    const std::vector<int>& values() const { return val_; }

private:
    const Module& d_;
    const Module& c_;
    bool injective_;
    std::vector<int> val_;
    std::vector<int> used_;
    std::vector<int> trail_;
};

}  // namespace

std::vector<ModuleMap> hom_enumerate(ModPtr dom, ModPtr cod, const Bounds& bounds,
                                     long long* candidates) {
    const auto& gens = greedy_generators(*dom);
    std::vector<ModuleMap> out;
    long long local_count = 0;
    long long& count = candidates ? *candidates : local_count;

    HomSearch search(*dom, *cod, false);
    if (!search.assign(0, 0)) return out;

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == gens.size()) {
            if (!search.total()) throw SemanticError("hom search: generator set does not generate");
            out.push_back(ModuleMap{dom, cod, search.values()});
            return;
        }
        for (int img = 0; img < cod->size; ++img) {
            if (++count > bounds.max_hom_candidates)
                throw BoundExceeded("hom search exceeded the candidate bound");
            std::size_t m = search.mark();
            if (search.assign(gens[depth], img)) self(self, depth + 1);
            search.rollback(m);
        }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(),
              [](const ModuleMap& a, const ModuleMap& b) { return a.val < b.val; });
    return out;
}

namespace {

bool find_bijective_hom(ModPtr a, ModPtr b, const Bounds& bounds) {
    const auto& gens = greedy_generators(*a);
    HomSearch search(*a, *b, true);
    if (!search.assign(0, 0)) return false;
    long long count = 0;
    auto recurse = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == gens.size()) return search.total();
        for (int img = 0; img < b->size; ++img) {
            if (++count > bounds.max_hom_candidates)
                throw BoundExceeded("isomorphism search exceeded the candidate bound");
            std::size_t m = search.mark();
            if (search.assign(gens[depth], img) && self(self, depth + 1)) return true;
            search.rollback(m);
        }
        return false;
    };
    return recurse(recurse, 0);
}

}  // namespace

bool is_isomorphic(ModPtr a, ModPtr b, const Subset& ring_socle, const Bounds& bounds) {
    if (a->R != b->R) throw SemanticError("is_isomorphic: modules over different rings");
    if (a->size != b->size) return false;
    // cheap invariants first
    auto ann = [](const Module& m) {
        std::vector<int> out;
        for (int r = 0; r < m.R->size; ++r) {
            bool kills = true;
            for (int x = 0; x < m.size && kills; ++x)
                if (m.act(x, r) != 0) kills = false;
            if (kills) out.push_back(r);
        }
        return out;
    };
    if (ann(*a) != ann(*b)) return false;
    const auto& pa = structure_profile(*a, ring_socle, bounds);
    const auto& pb = structure_profile(*b, ring_socle, bounds);
    if (pa.length != pb.length || pa.socle.size() != pb.socle.size() ||
        pa.radical.size() != pb.radical.size() || pa.singular.size() != pb.singular.size())
        return false;
    return find_bijective_hom(a, b, bounds);
}

}  // namespace ringlab
