#include "stokes/painleve/lambda0.hpp"

#include <cmath>

#include "stokes/core/errors.hpp"
#include "stokes/core/roots.hpp"

namespace stokes::painleve {

Lambda0Branch::Lambda0Branch(const Equation& eq, Cplx t_anchor, Cplx lam_anchor)
    : eq_(&eq), t0_(t_anchor), l0_(lam_anchor) {
    // snap the anchor onto the root locus
    auto roots = eq.lambda_branches(t_anchor);
    Cplx best = roots.front();
    for (auto& r : roots)
        if (std::abs(r - lam_anchor) < std::abs(best - lam_anchor)) best = r;
    double scale = std::max(1.0, std::abs(best));
    if (std::abs(best - lam_anchor) > 1e-3 * scale)
        throw NonConvergence("anchor is not near any lam0 branch");
    l0_ = best;
    cache_.push_back({t0_, l0_});
}

Cplx Lambda0Branch::continue_root(Cplx t_from, Cplx lam_from, Cplx t_to) const {
    if (std::abs(t_to - t_from) == 0.0) return lam_from;
    double s = 0.0, ds = 0.25;
    Cplx lam = lam_from, lam_prev = lam_from;
    double ds_prev = 0.0;
    while (s < 1.0) {
        double step = std::min(ds, 1.0 - s);
        double s_new = s + step;
        Cplx t_new = t_from + s_new * (t_to - t_from);
        // secant predictor
        Cplx pred = (ds_prev > 0.0) ? lam + (lam - lam_prev) * (step / ds_prev) : lam;
        auto roots = core::poly_roots_flat(eq_->lambda_poly(t_new));
        Cplx best = roots.front();
        for (auto& r : roots)
            if (std::abs(r - pred) < std::abs(best - pred)) best = r;
        double gap = 1e300;
        for (auto& r : roots)
            if (std::abs(r - best) > 0.0) gap = std::min(gap, std::abs(r - best));
        if (std::abs(best - lam) > 0.5 * gap) {
            ds = 0.5 * step;
            if (ds < 1e-9)
                throw NonConvergence("lam0 continuation stalled near a branch collision");
            continue;
        }
        lam_prev = lam;
        lam = best;
        ds_prev = step;
        s = s_new;
        if (std::abs(best - lam_prev) < 0.1 * gap) ds = std::min(2.0 * step, 0.25);
    }
    return lam;
}

Cplx Lambda0Branch::along(const std::vector<Cplx>& t_waypoints) const {
    Cplx t = t0_, lam = l0_;
    for (Cplx tw : t_waypoints) {
        lam = continue_root(t, lam, tw);
        t = tw;
    }
    return lam;
}

Cplx Lambda0Branch::at(Cplx t_target) const {
    size_t best = 0;
    for (size_t i = 1; i < cache_.size(); ++i)
        if (std::abs(cache_[i].first - t_target) < std::abs(cache_[best].first - t_target))
            best = i;
    Cplx lam = continue_root(cache_[best].first, cache_[best].second, t_target);
    if (cache_.size() < 4096) cache_.push_back({t_target, lam});
    return lam;
}

}  // namespace stokes::painleve
