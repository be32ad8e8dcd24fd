#pragma once
#include <functional>
#include <string>
#include <vector>

#include "stokes/core/path.hpp"
#include "stokes/painleve/catalog.hpp"

namespace stokes::periods {

using core::Cplx;

// Closed integration contour for sqrt(q) dz together with its branch protocol.
struct Cycle {
    core::ComplexPath path;   // must be closed
    int branch_sign = +1;     // relative to the principal sqrt at path.start()
    std::string description;
};

// Branch-continued integral of sqrt(q) along a path. branch_sign picks the
// sheet at the start. Closed paths require the branch to return to itself
// (even total branching inside); otherwise BranchPointAt propagates.
Cplx sqrt_period(const std::function<Cplx(Cplx)>& q, const core::ComplexPath& path,
                 int branch_sign = +1, double tol = 1e-11);
Cplx sqrt_period(const std::function<Cplx(Cplx)>& q, const Cycle& cyc, double tol = 1e-11);

// Outcome of one integral identity check. Signs of both sides are branch
// choices, so `residual` is minimized over the relative sign.
struct IdentityReport {
    std::string check;
    Cplx lhs{0.0};
    Cplx rhs{0.0};
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Straight chord from `from` to `to` in the x plane, replaced by a two-arc
// detour around any finite pole of Q0 that comes within `clearance` of the
// chord. clearance < 0 selects 1e-4 of the smallest feature gap at (t, lam0),
// the same stop radius the trajectory tracer uses.
core::ComplexPath turning_point_path(const painleve::Equation& eq, Cplx t, Cplx lam0,
                                     Cplx from, Cplx to, double clearance = -1.0);

// Keeps `candidate` only when it stays within `hausdorff_budget` of the traced
// trajectory; beyond that the homotopy class is considered unpinned and the
// trajectory polyline itself (endpoints snapped to the candidate's) is used.
core::ComplexPath pin_to_trajectory(const core::ComplexPath& candidate,
                                    const std::vector<Cplx>& trajectory,
                                    double hausdorff_budget);

// The lam0 branch along a polyline in t, continued from the waypoint nearest
// to t_anchor (reached from (t_anchor, lam_anchor) first if they differ).
// Robust through branch collisions at the terminal waypoints: outside a
// collision shell a marched guide table tracks the branch leg by leg and
// evaluation snaps the guide to the nearest exact root of the lambda
// polynomial; inside a shell the local square-root model
// lam* + (lam_b - lam*) sqrt((t - r)/(t_b - r)) supplies the guide, fitted at
// the shell boundary t_b where marching is still well separated.
class Lam0AlongPath {
  public:
    Lam0AlongPath(const painleve::Equation& eq, Cplx t_anchor, Cplx lam_anchor,
                  std::vector<Cplx> waypoints);
    Cplx lam(Cplx t) const;
    const std::vector<Cplx>& waypoints() const { return pts_; }
    // whether the front (0) / back (1) route end is a branch collision
    bool collided(int end) const { return shell_[end].on; }

  private:
    struct Leg {
        Cplx a, b;
        std::vector<double> sig;  // ascending in [0,1]
        std::vector<Cplx> lam;
        Cplx interp(double s) const;
    };
    struct Shell {
        bool on = false;
        Cplx t_end, lam_star;  // collision point, collided root value
        Cplx t_b, lam_b;       // boundary fit point on the branch
    };
    Leg march(Cplx a, Cplx lam_a, Cplx b) const;
    void run_chain(size_t ia, int dirn, Cplx lam_start, Shell& sh, double dc);
    const painleve::Equation* eq_;
    std::vector<Cplx> pts_;
    std::vector<Leg> legs_;
    Shell shell_[2];  // [0]: pts_.front(), [1]: pts_.back()
};

// integral of sqrt(F1(lam0(t'), t')) dt' along the polyline through
// `waypoints` (consecutive duplicates dropped). Waypoint ends may be
// collision points of lam0 branches; the quarter-power vanishing of the
// integrand there is graded into.
Cplx t_plane_integral(const painleve::Equation& eq, Cplx t_anchor, Cplx lam_anchor,
                      const std::vector<Cplx>& waypoints, double tol = 1e-11);

// Turning-point merge identity at fixed t:
//   lhs = int_{a_t}^{lam0} sqrt(Q0(x, t)) dx,   rhs = (1/2) int_r^t sqrt(F1) dt'.
// r is the t-plane collision point the simple turning point a_t merges at.
IdentityReport half_period_check(const painleve::Equation& eq, Cplx t, Cplx lam0,
                                 Cplx a_t, Cplx r, double tol = 1e-6);

// Two-segment composition identity at t*:
//   lhs = int_{a1}^{a2} sqrt(Q0(x, t*)) dx,
//   rhs = (1/2) int sqrt(F1) dt' along t_route (r1 -> ... -> r2, through t*).
IdentityReport segment_sum_identity(const painleve::Equation& eq, Cplx t_star, Cplx lam_star,
                                    const std::vector<Cplx>& t_route, Cplx a1, Cplx a2,
                                    double tol = 1e-7);

// Residue of sqrt(q) at an even-order pole, via a small circle of radius
// 1e-3 * nearest_feature; the core evaluates at rho and 2*rho and enforces
// 1e-9 agreement. Odd branching around the circle raises BranchPointAt.
Cplx residue_of_sqrtQ(const std::function<Cplx(Cplx)>& q, Cplx pole, double nearest_feature,
                      int branch_sign = +1);
Cplx residue_of_sqrtQ_at_infinity(const std::function<Cplx(Cplx)>& q, double enclose_radius,
                                  int branch_sign = +1);

// Residue of sqrt(Q0) at one listed pole of the equation at (t, lam0).
// Throws OddOrderPole when the pole carries no single-valued residue.
Cplx equation_residue(const painleve::Equation& eq, Cplx t, Cplx lam0,
                      const painleve::PoleInfo& pole, int branch_sign = +1);

}  // namespace stokes::periods
