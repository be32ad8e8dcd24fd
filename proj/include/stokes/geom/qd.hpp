#pragma once
#include <functional>
#include <vector>

#include "stokes/core/integrate.hpp"

namespace stokes::geom {

using core::Cplx;

// A marked point of a quadratic differential q(z) dz^2.
// order > 0: zero of that order; order < 0: pole of order |order|.
struct Feature {
    Cplx z;
    int order = 1;

    // Trajectories emanate from zeros and from simple poles only.
    bool emits() const { return order >= 1 || order == -1; }
    // An order-m zero emits m+2 critical trajectories; a simple pole emits 1.
    int ray_count() const { return order + 2; }
};

struct QuadraticDifferential {
    std::function<Cplx(Cplx)> q;
    std::vector<Feature> features;

    // max(1, largest |feature location|); sets the length unit for steps.
    double scale() const;
    // Smallest pairwise distance between features (scale() if fewer than 2).
    double min_gap() const;
    // Distance from each feature to its nearest other feature.
    double gap_at(int i) const;
    // Index of the feature nearest to z, and its distance.
    int nearest_feature(Cplx z, double* dist = nullptr) const;
};

// Checks each declared feature order against the local growth rate of |q|
// measured on two probe circles. Throws ToleranceNotMet on mismatch; the
// estimate is good to a few percent, so mislabelled integer orders are caught.
void verify_features(const QuadraticDifferential& qd);

// Outgoing directions of the critical trajectories at feature fi.
//
// Uses the primitive zeta(theta) = int_0^r sqrt(q) along the radial segment
// from the feature; zeta^2 is single valued around the feature, and rays sit
// where Im(e^{2i phase} zeta^2) = 0 with Re(e^{2i phase} zeta^2) > 0 (the
// Re < 0 solutions are the orthogonal foliation). Returns angles sorted
// ascending in [0, 2pi); size is ray_count(). If probe_radius is non-null it
// receives the circle radius the angles refer to.
std::vector<double> ray_directions(const QuadraticDifferential& qd, int fi,
                                   double phase, double* probe_radius = nullptr);

}  // namespace stokes::geom
