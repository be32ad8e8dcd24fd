#include "stokes/saddle/segments.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/core/errors.hpp"
#include "stokes/core/sqrt_integral.hpp"

namespace stokes::saddle {

namespace {
constexpr double kPi = 3.14159265358979323846;

int winding_around(const std::vector<Cplx>& pts, Cplx z0) {
    double acc = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        Cplx a = pts[k - 1] - z0, b = pts[k] - z0;
        if (a == Cplx(0.0) || b == Cplx(0.0)) continue;  // touches the center
        acc += std::arg(b / a);
    }
    return static_cast<int>(std::lround(acc / (2.0 * kPi)));
}

struct Candidate {
    int from, to;
    bool loop;
    std::vector<Cplx> path;
};

// feature-to-feature polyline: source zero, trace points up to the closest
// recorded approach, target zero
std::vector<Cplx> close_up(const geom::QuadraticDifferential& qd, int from,
                           const std::vector<Cplx>& pts, std::size_t kstar,
                           Cplx target) {
    double snap = 1e-9 * qd.scale();
    std::vector<Cplx> path;
    path.push_back(qd.features[from].z);
    for (std::size_t k = 0; k <= kstar && k < pts.size(); ++k) {
        if (std::abs(pts[k] - path.back()) < snap) continue;
        path.push_back(pts[k]);
    }
    while (path.size() > 1 && std::abs(path.back() - target) < snap) path.pop_back();
    path.push_back(target);
    return path;
}

// The candidate is the FIRST close approach to a zero along the trace. A ray
// that skims one zero and travels on is no longer a separatrix afterwards, so
// later approaches would certify as factored sums of genuine segments.
void collect(const geom::QuadraticDifferential& qd, const geom::TracedRay& ray,
             double thresh, std::vector<Candidate>& cands) {
    const int src = ray.spec.feature;
    if (qd.features[src].order < 1) return;  // segments join zeros
    const auto& pts = ray.result.points;
    if (pts.size() < 2) return;
    const Cplx zsrc = qd.features[src].z;
    const double leave = 3.0 * ray.spec.probe_radius;

    bool left_self = false;
    int jhit = -1;
    std::size_t khit = 0;
    for (std::size_t k = 0; k < pts.size() && jhit < 0; ++k) {
        if (!left_self && std::abs(pts[k] - zsrc) > leave) left_self = true;
        for (std::size_t j = 0; j < qd.features.size(); ++j) {
            if (qd.features[j].order < 1) continue;
            if (static_cast<int>(j) == src && !left_self) continue;
            if (std::abs(pts[k] - qd.features[j].z) < thresh) {
                jhit = static_cast<int>(j);
                khit = k;
                break;
            }
        }
    }
    if (jhit < 0) return;

    Cplx zj = qd.features[jhit].z;
    std::size_t kstar = khit;
    double best = std::abs(pts[khit] - zj);
    for (std::size_t k = khit + 1; k < pts.size(); ++k) {
        double d = std::abs(pts[k] - zj);
        if (d > 2.0 * thresh) break;  // left the approach window
        if (d < best) {
            best = d;
            kstar = k;
        }
    }
    cands.push_back({src, jhit, jhit == src, close_up(qd, src, pts, kstar, zj)});
}
}  // namespace

std::vector<Segment> detect_segments(const geom::QuadraticDifferential& qd,
                                     const geom::StokesGraph& g,
                                     const DetectOptions& opt) {
    const double thresh = opt.candidate_frac * qd.min_gap();
    const Cplx eiphi = std::polar(1.0, g.phase);

    std::vector<Candidate> cands;
    for (const auto& ray : g.rays) collect(qd, ray, thresh, cands);

    std::vector<Segment> out;
    for (auto& c : cands) {
        Cplx P;
        try {
            P = core::sqrt_polyline_integral(qd.q, c.path, opt.quad_tol);
        } catch (const StokesError&) {
            continue;  // path clipped a feature; not certifiable as traced
        }
        double ref = std::max(1.0, std::abs(P));
        double resid = std::abs(std::imag(eiphi * P)) / ref;
        if (resid > opt.loose_tol) continue;

        Segment s;
        s.from = c.from;
        s.to = c.to;
        s.loop = c.loop;
        s.path = std::move(c.path);
        if (std::real(eiphi * P) < 0.0) P = -P;
        s.period = P;
        s.im_residual = resid;
        s.near_degenerate = resid > opt.cert_tol;
        if (s.loop) {
            for (std::size_t m = 0; m < qd.features.size(); ++m)
                s.winding.push_back(winding_around(s.path, qd.features[m].z));
            int wsum = 0;
            for (int w : s.winding) wsum += w;
            if (wsum < 0) {
                for (int& w : s.winding) w = -w;
                std::reverse(s.path.begin(), s.path.end());
            }
        } else if (s.from > s.to) {
            std::swap(s.from, s.to);
            std::reverse(s.path.begin(), s.path.end());
        }
        out.push_back(std::move(s));
    }

    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        if (a.loop != b.loop) return a.loop < b.loop;
        double pa = std::abs(a.period), pb = std::abs(b.period);
        if (std::abs(pa - pb) > 1e-9 * std::max(1.0, pa)) return pa < pb;
        return a.im_residual < b.im_residual;
    });
    std::vector<Segment> uniq;
    for (auto& s : out) {
        bool dup = false;
        if (!uniq.empty()) {
            const Segment& p = uniq.back();
            dup = p.from == s.from && p.to == s.to && p.loop == s.loop &&
                  p.winding == s.winding &&
                  std::abs(std::abs(p.period) - std::abs(s.period)) <=
                      1e-6 * std::max(1.0, std::abs(p.period));
        }
        if (!dup) {
            uniq.push_back(std::move(s));
        } else if (s.im_residual < uniq.back().im_residual) {
            // among near-identical candidates keep the best-certified one
            uniq.back() = std::move(s);
        }
    }
    return uniq;
}

}  // namespace stokes::saddle
