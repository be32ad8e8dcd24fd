#include "stokes/geom/trace.hpp"

#include <cmath>

#include "stokes/core/branch_track.hpp"
#include "stokes/core/errors.hpp"

namespace stokes::geom {

namespace {

// sqrt(q) continued along the evaluation sequence of the march.
struct BranchedRoot {
    const QuadraticDifferential& qd;
    core::SqrtTracker trk;

    Cplx operator()(Cplx z) {
        Cplx w = trk.step(qd.q(z));
        double a = std::abs(w);
        if (!(a > 0.0) || !std::isfinite(a))
            throw StepCollapse("sqrt(q) degenerate on trajectory");
        return w;
    }
};

}  // namespace

TraceResult trace_trajectory(const QuadraticDifferential& qd, Cplx z0,
                             Cplx dir_seed, const TraceOptions& opt) {
    const double scale = qd.scale();
    const double stop_r = opt.stop_frac * qd.min_gap();
    double resc = 1.0;
    for (const auto& f : qd.features) resc = std::max(resc, std::abs(f.z) + 1.0);
    resc *= opt.escape_factor;
    const Cplx eiphi = std::polar(1.0, opt.phase);

    BranchedRoot root{qd, {}};
    {
        Cplx w0 = std::sqrt(qd.q(z0));
        // Choose the sheet that moves with dir_seed.
        Cplx v = 1.0 / (eiphi * w0);
        if (std::real(std::conj(dir_seed) * v) < 0.0) w0 = -w0;
        root.trk.seed(w0);
    }

    TraceResult res;
    res.min_dist.assign(qd.features.size(), 1e300);
    res.closest_point.assign(qd.features.size(), z0);
    auto note_dist = [&](Cplx z) {
        for (std::size_t j = 0; j < qd.features.size(); ++j) {
            double dj = std::abs(z - qd.features[j].z);
            if (dj < res.min_dist[j]) {
                res.min_dist[j] = dj;
                res.closest_point[j] = z;
            }
        }
    };

    Cplx z = z0;
    res.points.push_back(z);
    note_dist(z);

    for (long n = 0; n < opt.max_steps; ++n) {
        double d;
        qd.nearest_feature(z, &d);
        double ds = opt.step * scale * std::min(1.0, 0.2 + d / scale);
        // Geometric approach: never cross more than half the remaining gap,
        // so a capture disc cannot be jumped over.
        ds = std::min(ds, 0.45 * std::max(d, stop_r));
        if (!(ds > 1e-12 * scale)) throw StepCollapse("trajectory step underflow");

        Cplx wn = root(z);
        Cplx k1 = 1.0 / (eiphi * wn);
        double h = ds / std::abs(k1);
        Cplx k2 = 1.0 / (eiphi * root(z + 0.5 * h * k1));
        Cplx k3 = 1.0 / (eiphi * root(z + 0.5 * h * k2));
        Cplx k4 = 1.0 / (eiphi * root(z + h * k3));
        Cplx dz = (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        // Honest zeta increment along the chord actually taken; its imaginary
        // part measures the transverse drift off the level set.
        Cplx wm = root(z + 0.5 * dz);
        Cplx we = root(z + dz);
        Cplx dzeta = eiphi * (dz / 6.0) * (wn + 4.0 * wm + we);
        Cplx znew = z + dz;
        double im = std::imag(dzeta);
        Cplx dzc = Cplx(0.0, -1.0) * (im / (eiphi * we));
        if (std::abs(dzc) > 0.5 * ds) dzc *= (0.5 * ds) / std::abs(dzc);
        znew += dzc;

        if (!std::isfinite(znew.real()) || !std::isfinite(znew.imag()))
            throw StepCollapse("trajectory left the finite plane");

        res.length += std::abs(dz) + std::abs(dzc);
        z = znew;
        note_dist(z);
        if ((n + 1) % opt.record_every == 0) res.points.push_back(z);

        double dnew;
        int nf = qd.nearest_feature(z, &dnew);
        if (dnew < stop_r) {
            if (res.points.back() != z) res.points.push_back(z);
            res.end = TraceResult::End::Feature;
            res.feature = nf;
            return res;
        }
        if (std::abs(z) > resc) {
            if (res.points.back() != z) res.points.push_back(z);
            res.end = TraceResult::End::Escape;
            return res;
        }
    }
    if (res.points.back() != z) res.points.push_back(z);
    res.end = TraceResult::End::MaxSteps;
    return res;
}

}  // namespace stokes::geom
