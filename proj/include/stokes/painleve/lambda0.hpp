#pragma once
#include <utility>
#include <vector>

#include "stokes/painleve/catalog.hpp"

namespace stokes::painleve {

// One sheet of the multi-valued lam0(t), anchored at a known (t, lam0) pair.
//
// Continuation follows straight t-segments with adaptive steps: at each step
// the nearest root of lambda_poly is taken, and the step is halved whenever
// the root moved by more than half its distance to the nearest other root.
// Results are homotopy-sensitive; use along() with explicit waypoints when the
// route matters, at() only for evaluations near already-visited points.
class Lambda0Branch {
  public:
    Lambda0Branch(const Equation& eq, Cplx t_anchor, Cplx lam_anchor);

    const Equation& equation() const { return *eq_; }
    Cplx t_anchor() const { return t0_; }
    Cplx lam_anchor() const { return l0_; }

    // continue from an arbitrary known point along one straight t-segment
    Cplx continue_root(Cplx t_from, Cplx lam_from, Cplx t_to) const;

    // continue from the anchor through the listed waypoints in order
    Cplx along(const std::vector<Cplx>& t_waypoints) const;

    // straight segment from the nearest cached point; caches the result
    Cplx at(Cplx t_target) const;

  private:
    const Equation* eq_;
    Cplx t0_, l0_;
    mutable std::vector<std::pair<Cplx, Cplx>> cache_;
};

}  // namespace stokes::painleve
