#pragma once
#include <vector>

#include "stokes/geom/trace.hpp"

namespace stokes::geom {

struct RaySpec {
    int feature = -1;           // emitting feature index
    double angle = 0.0;         // outgoing direction at the probe circle
    double probe_radius = 0.0;  // where the trace is seeded
};

struct TracedRay {
    RaySpec spec;
    TraceResult result;
};

// All critical trajectories of e^{2i phase} q dz^2, one trace per outgoing
// ray, ordered by (feature index, angle). Both builders produce identical
// results; the parallel one distributes independent traces over OpenMP
// threads when compiled with OpenMP support.
struct StokesGraph {
    double phase = 0.0;
    std::vector<TracedRay> rays;
};

StokesGraph build_stokes_graph(const QuadraticDifferential& qd,
                               const TraceOptions& opt);
StokesGraph build_stokes_graph_serial(const QuadraticDifferential& qd,
                                      const TraceOptions& opt);

}  // namespace stokes::geom
