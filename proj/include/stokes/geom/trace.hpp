#pragma once
#include <vector>

#include "stokes/geom/qd.hpp"

namespace stokes::geom {

struct TraceOptions {
    double phase = 0.0;
    double step = 0.008;         // target |dz| as a fraction of qd.scale()
    double stop_frac = 1e-4;     // capture radius as a fraction of qd.min_gap()
    double escape_factor = 10.0; // escape at |z| > factor * (max |feature| + 1)
    long max_steps = 200000;
    int record_every = 4;
};

struct TraceResult {
    enum class End { Feature, Escape, MaxSteps };
    End end = End::MaxSteps;
    int feature = -1;                 // index into qd.features when end == Feature
    std::vector<Cplx> points;         // decimated polyline, starts at the seed point
    std::vector<double> min_dist;     // closest approach to each feature
    std::vector<Cplx> closest_point;  // where that approach happened
    double length = 0.0;              // arclength of the traced curve
};

// Follows the trajectory of e^{2i phase} q(z) dz^2 through z0, moving in the
// half plane of dir_seed. The curve is integrated in its natural parameter
// zeta = int e^{i phase} sqrt(q) dz with RK4 steps of constant |dz|, shrinking
// near features, and is reprojected transversally each step so the running
// Im(zeta) drift stays at roundoff. Ends on feature capture, escape, or the
// step budget; a vanishing or non-finite sqrt(q) raises StepCollapse.
TraceResult trace_trajectory(const QuadraticDifferential& qd, Cplx z0,
                             Cplx dir_seed, const TraceOptions& opt);

}  // namespace stokes::geom
