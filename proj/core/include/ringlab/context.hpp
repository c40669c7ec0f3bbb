#pragma once

#include "ringlab/hom.hpp"
#include "ringlab/module.hpp"
#include "ringlab/ringstruct.hpp"

namespace ringlab {

struct SimpleInfo {
    ModPtr mod;           // representative, realized as R / maximal right ideal
    Subset max_ideal;
    bool projective = false;  // isomorphic to eR for some idempotent e with eR simple
};

/// Lazily computed per-ring facts shared by the oracle and the criteria.
class RingCtx {
public:
    RingCtx(RingPtr ring, Bounds bounds = {}) : R(std::move(ring)), bounds(std::move(bounds)) {}

    RingPtr R;
    Bounds bounds;
    long long hom_candidates_used = 0;

    ModPtr regular();
    const std::vector<Subset>& regular_lattice();
    const Subset& right_socle();  // Soc(R_R)
    const Subset& radical();      // J(R)
    bool semisimple();
    const Profile& profile(const ModPtr& m);
    bool isomorphic(const ModPtr& a, const ModPtr& b);

    /// One representative per isomorphism class of simple right modules.
    const std::vector<SimpleInfo>& simples();

    /// Local length-two right modules up to isomorphism (as quotients R/K).
    const std::vector<ModPtr>& length_two_locals();

private:
    ModPtr regular_;
    std::optional<Subset> socle_, radical_;
    std::optional<std::vector<SimpleInfo>> simples_;
    std::optional<std::vector<ModPtr>> l2locals_;
};

}  // namespace ringlab
