#include "stokes/periods/periods.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/core/errors.hpp"
#include "stokes/core/residue.hpp"
#include "stokes/core/roots.hpp"
#include "stokes/core/sqrt_integral.hpp"
#include "stokes/painleve/lambda0.hpp"

namespace stokes::periods {

namespace {

constexpr double PI = 3.14159265358979323846;

double point_segment_dist(Cplx p, Cplx a, Cplx b, double* s_out) {
    Cplx d = b - a;
    double den = std::norm(d);
    double s = den > 0.0 ? std::clamp((((p - a) * std::conj(d)).real()) / den, 0.0, 1.0) : 0.0;
    if (s_out) *s_out = s;
    return std::abs(p - (a + s * d));
}

}  // namespace

// Each leg carries a marched guide table; evaluation snaps the interpolated
// guide value to the nearest exact root of the lambda polynomial, so the
// guide only has to stay closer to the tracked root than to any other.
// Steps are accepted while the root moves by less than 0.4 of the local root
// gap. Near a terminal collision nearest-root selection degrades (the gap
// closes like sqrt(t - r) while guide error is linear), so marching stops at
// a shell boundary and the square-root model takes over inside.
Lam0AlongPath::Lam0AlongPath(const painleve::Equation& eq, Cplx t_anchor, Cplx lam_anchor,
                             std::vector<Cplx> waypoints)
    : eq_(&eq) {
    double scale = 1.0;
    for (Cplx w : waypoints) scale = std::max(scale, std::abs(w));
    for (Cplx w : waypoints)
        if (pts_.empty() || std::abs(w - pts_.back()) > 1e-12 * scale) pts_.push_back(w);
    if (pts_.size() < 2)
        throw std::invalid_argument("t integration needs at least two distinct waypoints");
    size_t ia = 0;
    for (size_t i = 1; i < pts_.size(); ++i)
        if (std::abs(pts_[i] - t_anchor) < std::abs(pts_[ia] - t_anchor)) ia = i;
    Cplx lam_ia = lam_anchor;
    if (std::abs(pts_[ia] - t_anchor) > 1e-12 * scale)
        lam_ia = march(t_anchor, lam_anchor, pts_[ia]).lam.back();

    double chain_len = 0.0;
    for (size_t i = 0; i + 1 < pts_.size(); ++i) chain_len += std::abs(pts_[i + 1] - pts_[i]);
    auto detect = [this](Cplx te, Shell& sh) {
        auto roots = core::poly_roots_flat(eq_->lambda_poly(te));
        if (roots.size() < 2) return;
        double rs = 1.0;
        for (Cplx r : roots) rs = std::max(rs, std::abs(r));
        double gap = 1e300;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                if (std::abs(roots[i] - roots[j]) < gap) {
                    gap = std::abs(roots[i] - roots[j]);
                    sh.lam_star = 0.5 * (roots[i] + roots[j]);
                }
        if (gap < 1e-4 * rs) {
            sh.on = true;
            sh.t_end = te;
        }
    };
    detect(pts_.front(), shell_[0]);
    detect(pts_.back(), shell_[1]);
    run_chain(ia, -1, lam_ia, shell_[0], 0.05 * chain_len);
    run_chain(ia, +1, lam_ia, shell_[1], 0.05 * chain_len);
}

// march legs from the anchor waypoint toward one route end; when that end is
// a branch collision, stop at distance dc from it and record the fit point
void Lam0AlongPath::run_chain(size_t ia, int dirn, Cplx lam_start, Shell& sh, double dc) {
    if (sh.on) dc = std::min(dc, 0.5 * std::abs(pts_[ia] - sh.t_end));
    Cplx lam = lam_start;
    size_t i = ia;
    while (dirn > 0 ? i + 1 < pts_.size() : i > 0) {
        size_t j = dirn > 0 ? i + 1 : i - 1;
        Cplx a = pts_[i], b = pts_[j];
        if (sh.on && std::abs(b - sh.t_end) <= dc) {
            if (std::abs(a - sh.t_end) <= dc) {
                // degenerate: already inside the shell, fit here
                sh.t_b = a;
                sh.lam_b = lam;
                return;
            }
            // bisect the boundary crossing |t(s) - t_end| = dc on this leg
            double lo = 0.0, hi = 1.0;
            for (int k = 0; k < 60; ++k) {
                double mid = 0.5 * (lo + hi);
                (std::abs(a + mid * (b - a) - sh.t_end) > dc ? lo : hi) = mid;
            }
            Cplx tb = a + lo * (b - a);
            legs_.push_back(march(a, lam, tb));
            sh.t_b = tb;
            sh.lam_b = legs_.back().lam.back();
            return;
        }
        legs_.push_back(march(a, lam, b));
        lam = legs_.back().lam.back();
        i = j;
    }
    if (sh.on) {
        sh.t_b = pts_[dirn > 0 ? pts_.size() - 1 : 0];
        sh.lam_b = lam;
    }
}

Cplx Lam0AlongPath::Leg::interp(double s) const {
    auto it = std::upper_bound(sig.begin(), sig.end(), s);
    size_t i = std::min<size_t>(std::max<ptrdiff_t>(1, it - sig.begin()), sig.size() - 1);
    double w = (s - sig[i - 1]) / std::max(sig[i] - sig[i - 1], 1e-300);
    return lam[i - 1] + w * (lam[i] - lam[i - 1]);
}

Lam0AlongPath::Leg Lam0AlongPath::march(Cplx a, Cplx lam_a, Cplx b) const {
    Leg L;
    L.a = a;
    L.b = b;
    L.sig = {0.0};
    L.lam = {lam_a};
    double s = 0.0, ds = 1.0 / 48.0, ds_prev = 0.0;
    Cplx lam = lam_a, lam_prev = lam_a;
    while (s < 1.0) {
        double step = std::min(ds, 1.0 - s);
        double s_new = s + step;
        Cplx t_new = a + s_new * (b - a);
        Cplx pred = (ds_prev > 0.0) ? lam + (lam - lam_prev) * (step / ds_prev) : lam;
        auto roots = core::poly_roots_flat(eq_->lambda_poly(t_new));
        Cplx pick = roots.front();
        for (Cplx r : roots)
            if (std::abs(r - pred) < std::abs(pick - pred)) pick = r;
        double gap = 1e300;
        for (Cplx r : roots)
            if (std::abs(r - pick) > 0.0) gap = std::min(gap, std::abs(r - pick));
        if (std::abs(pick - lam) > 0.4 * gap) {
            ds = 0.5 * step;
            if (ds < 1e-13)
                throw NonConvergence(
                    "lam0 branches collide in the interior of a t-integration leg");
            continue;
        }
        lam_prev = lam;
        lam = pick;
        ds_prev = step;
        s = s_new;
        L.sig.push_back(s);
        L.lam.push_back(lam);
        if (std::abs(pick - lam_prev) < 0.1 * gap) ds = std::min(2.0 * step, 1.0 / 48.0);
    }
    return L;
}

Cplx Lam0AlongPath::lam(Cplx t) const {
    Cplx guide;
    bool have = false;
    for (const Shell& sh : shell_) {
        if (!sh.on) continue;
        double rb = std::abs(sh.t_b - sh.t_end);
        if (std::abs(t - sh.t_end) < rb) {
            // model error is O(|t - t_end|) against a root gap of
            // O(sqrt(|t - t_end|)), so nearest-root snap is unambiguous
            Cplx h = std::sqrt((t - sh.t_end) / (sh.t_b - sh.t_end));
            guide = sh.lam_star + (sh.lam_b - sh.lam_star) * h;
            have = true;
            break;
        }
    }
    if (!have) {
        const Leg* best = nullptr;
        double bd = 1e300, bs = 0.0;
        for (const Leg& L : legs_) {
            Cplx d = L.b - L.a;
            double den = std::norm(d);
            double s =
                den > 0.0 ? std::clamp((((t - L.a) * std::conj(d)).real()) / den, 0.0, 1.0) : 0.0;
            double dist = std::abs(t - (L.a + s * d));
            if (dist < bd) {
                bd = dist;
                bs = s;
                best = &L;
            }
        }
        guide = best->interp(bs);
    }
    auto roots = core::poly_roots_flat(eq_->lambda_poly(t));
    Cplx pick = roots.front();
    for (Cplx r : roots)
        if (std::abs(r - guide) < std::abs(pick - guide)) pick = r;
    return pick;
}

Cplx sqrt_period(const std::function<Cplx(Cplx)>& q, const core::ComplexPath& path,
                 int branch_sign, double tol) {
    return double(branch_sign) * core::sqrt_path_integral(q, path, tol);
}

Cplx sqrt_period(const std::function<Cplx(Cplx)>& q, const Cycle& cyc, double tol) {
    if (!cyc.path.closed())
        throw std::invalid_argument("cycle path must be closed: " + cyc.description);
    return sqrt_period(q, cyc.path, cyc.branch_sign, tol);
}

core::ComplexPath turning_point_path(const painleve::Equation& eq, Cplx t, Cplx lam0,
                                     Cplx from, Cplx to, double clearance) {
    std::vector<Cplx> feats{lam0};
    for (Cplx z : eq.branch_zeros(t, lam0)) feats.push_back(z);
    std::vector<Cplx> finite_poles;
    for (const auto& p : eq.poles(t))
        if (!p.at_infinity) {
            feats.push_back(p.location);
            finite_poles.push_back(p.location);
        }
    double min_gap = 1e300;
    for (size_t i = 0; i < feats.size(); ++i)
        for (size_t j = i + 1; j < feats.size(); ++j)
            min_gap = std::min(min_gap, std::abs(feats[i] - feats[j]));
    if (!(min_gap < 1e300)) min_gap = std::abs(to - from);
    if (clearance < 0.0) clearance = 1e-4 * min_gap;

    struct Hit {
        double s;
        Cplx pole;
        double d;
    };
    std::vector<Hit> hits;
    // detour around finite poles, and around lam0 when it sits on the chord
    // interior: sqrt(Q0) is single-valued at the double zero, so the arc
    // leaves the integral unchanged while keeping the branch tracker away
    // from an interior zero
    std::vector<Cplx> obstacles = finite_poles;
    if (std::abs(lam0 - from) > clearance && std::abs(lam0 - to) > clearance)
        obstacles.push_back(lam0);
    for (Cplx p : obstacles) {
        double s;
        double d = point_segment_dist(p, from, to, &s);
        if (d < clearance && s > 0.0 && s < 1.0) hits.push_back({s, p, d});
    }
    if (hits.empty()) return core::ComplexPath::line(from, to);
    std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.s < y.s; });

    std::vector<core::PathSeg> segs;
    Cplx cur = from;
    Cplx dir = to - from;
    double len = std::abs(dir);
    auto push_line = [&segs](Cplx a, Cplx b) {
        core::PathSeg line;
        line.kind = core::PathSeg::Kind::Line;
        line.a = a;
        line.b = b;
        segs.push_back(line);
    };
    for (const Hit& h : hits) {
        double R = 3.0 * clearance;
        for (Cplx f : feats)
            if (std::abs(f - h.pole) > 0.0) R = std::min(R, 0.3 * std::abs(f - h.pole));
        double half = std::sqrt(std::max(R * R - h.d * h.d, 0.0)) / len;
        Cplx A = from + std::max(h.s - half, 0.0) * dir;
        Cplx B = from + std::min(h.s + half, 1.0) * dir;
        double thA = std::arg(A - h.pole), thB = std::arg(B - h.pole);
        // sweep on whichever side keeps farther from the other features
        double ccwB = thB > thA ? thB : thB + 2.0 * PI;
        double cwB = thB < thA ? thB : thB - 2.0 * PI;
        Cplx mid_ccw = h.pole + R * std::polar(1.0, 0.5 * (thA + ccwB));
        Cplx mid_cw = h.pole + R * std::polar(1.0, 0.5 * (thA + cwB));
        double clr_ccw = 1e300, clr_cw = 1e300;
        for (Cplx f : feats)
            if (std::abs(f - h.pole) > 0.0) {
                clr_ccw = std::min(clr_ccw, std::abs(mid_ccw - f));
                clr_cw = std::min(clr_cw, std::abs(mid_cw - f));
            }
        double thEnd = clr_ccw >= clr_cw ? ccwB : cwB;
        double thMid = 0.5 * (thA + thEnd);
        if (std::abs(cur - A) > 0.0) push_line(cur, A);
        for (auto [u0, u1] : {std::pair{thA, thMid}, std::pair{thMid, thEnd}}) {
            core::PathSeg arc;
            arc.kind = core::PathSeg::Kind::Arc;
            arc.center = h.pole;
            arc.radius = R;
            arc.th0 = u0;
            arc.th1 = u1;
            segs.push_back(arc);
        }
        cur = B;
    }
    push_line(cur, to);
    return core::ComplexPath(std::move(segs));
}

core::ComplexPath pin_to_trajectory(const core::ComplexPath& candidate,
                                    const std::vector<Cplx>& trajectory,
                                    double hausdorff_budget) {
    if (trajectory.size() < 2) return candidate;
    if (core::hausdorff(candidate.sample(), trajectory) <= hausdorff_budget) return candidate;
    std::vector<Cplx> pts = trajectory;
    pts.front() = candidate.start();
    pts.back() = candidate.end();
    return core::ComplexPath(pts);
}

Cplx t_plane_integral(const painleve::Equation& eq, Cplx t_anchor, Cplx lam_anchor,
                      const std::vector<Cplx>& waypoints, double tol) {
    Lam0AlongPath guide(eq, t_anchor, lam_anchor, waypoints);
    auto f = [&eq, &guide](Cplx t) { return eq.F1(guide.lam(t), t); };
    return core::sqrt_polyline_integral(f, guide.waypoints(), tol);
}

IdentityReport half_period_check(const painleve::Equation& eq, Cplx t, Cplx lam0, Cplx a_t,
                                 Cplx r, double tol) {
    IdentityReport rep;
    rep.check = "half_period";
    rep.tolerance = tol;
    double scale = std::max({std::abs(t), std::abs(r), std::abs(lam0), std::abs(a_t), 1.0});
    if (std::abs(t - r) > 1e-13 * scale) {
        double qtol = std::min(1e-11, 1e-2 * tol);
        rep.lhs = core::sqrt_path_integral([&eq, t, lam0](Cplx x) { return eq.Q0(x, t, lam0); },
                                           turning_point_path(eq, t, lam0, a_t, lam0), qtol);
        rep.rhs = 0.5 * t_plane_integral(eq, t, lam0, {r, t}, qtol);
    }
    rep.residual = std::min(std::abs(rep.lhs - rep.rhs), std::abs(rep.lhs + rep.rhs));
    rep.pass = rep.residual <= tol;
    return rep;
}

IdentityReport segment_sum_identity(const painleve::Equation& eq, Cplx t_star, Cplx lam_star,
                                    const std::vector<Cplx>& t_route, Cplx a1, Cplx a2,
                                    double tol) {
    IdentityReport rep;
    rep.check = "segment_sum";
    rep.tolerance = tol;
    double qtol = std::min(1e-11, 1e-2 * tol);
    rep.lhs = core::sqrt_path_integral(
        [&eq, t_star, lam_star](Cplx x) { return eq.Q0(x, t_star, lam_star); },
        turning_point_path(eq, t_star, lam_star, a1, a2), qtol);
    rep.rhs = 0.5 * t_plane_integral(eq, t_star, lam_star, t_route, qtol);
    rep.residual = std::min(std::abs(rep.lhs - rep.rhs), std::abs(rep.lhs + rep.rhs));
    rep.pass = rep.residual <= tol;
    return rep;
}

Cplx residue_of_sqrtQ(const std::function<Cplx(Cplx)>& q, Cplx pole, double nearest_feature,
                      int branch_sign) {
    return core::sqrt_circle_residue(q, pole, 1e-3 * nearest_feature, branch_sign);
}

Cplx residue_of_sqrtQ_at_infinity(const std::function<Cplx(Cplx)>& q, double enclose_radius,
                                  int branch_sign) {
    return core::sqrt_residue_at_infinity(q, enclose_radius, branch_sign);
}

Cplx equation_residue(const painleve::Equation& eq, Cplx t, Cplx lam0,
                      const painleve::PoleInfo& pole, int branch_sign) {
    // pointwise Q0: the expanded num/den form of q0_rational cancels
    // catastrophically within ~1e-4 of a high-order pole
    auto q = [&eq, t, lam0](Cplx x) { return eq.Q0(x, t, lam0); };
    std::vector<Cplx> feats{lam0};
    for (Cplx z : eq.branch_zeros(t, lam0)) feats.push_back(z);
    for (const auto& p : eq.poles(t))
        if (!p.at_infinity) feats.push_back(p.location);
    if (pole.at_infinity) {
        if (!pole.has_residue)
            throw OddOrderPole("behavior at infinity has no single-valued sqrt residue");
        // modest radius: the trapezoid converges geometrically outside the
        // features while its roundoff floor grows like R^3
        double R = 1.0;
        for (Cplx f : feats) R = std::max(R, std::abs(f));
        return residue_of_sqrtQ_at_infinity(q, 3.0 * (R + 1.0), branch_sign);
    }
    if (pole.order % 2 != 0)
        throw OddOrderPole("odd-order pole is a branch point; sqrt residue undefined");
    double nearest = 1e300;
    for (Cplx f : feats)
        if (std::abs(f - pole.location) > 1e-12) nearest = std::min(nearest, std::abs(f - pole.location));
    if (!(nearest < 1e300)) nearest = 1.0;
    return residue_of_sqrtQ(q, pole.location, nearest, branch_sign);
}

}  // namespace stokes::periods
