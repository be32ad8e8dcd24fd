#include "stokes/geom/stokes_graph.hpp"

#include <cmath>

#include "stokes/parallel.hpp"

namespace stokes::geom {

namespace {

std::vector<RaySpec> collect_specs(const QuadraticDifferential& qd,
                                   double phase) {
    std::vector<RaySpec> specs;
    for (std::size_t i = 0; i < qd.features.size(); ++i) {
        if (!qd.features[i].emits()) continue;
        double pr = 0.0;
        for (double a : ray_directions(qd, static_cast<int>(i), phase, &pr))
            specs.push_back({static_cast<int>(i), a, pr});
    }
    return specs;
}

TracedRay trace_spec(const QuadraticDifferential& qd, const RaySpec& s,
                     const TraceOptions& opt) {
    Cplx dir = std::polar(1.0, s.angle);
    Cplx z0 = qd.features[s.feature].z + s.probe_radius * dir;
    return {s, trace_trajectory(qd, z0, dir, opt)};
}

}  // namespace

StokesGraph build_stokes_graph_serial(const QuadraticDifferential& qd,
                                      const TraceOptions& opt) {
    StokesGraph g;
    g.phase = opt.phase;
    auto specs = collect_specs(qd, opt.phase);
    g.rays.resize(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        g.rays[i] = trace_spec(qd, specs[i], opt);
    return g;
}

StokesGraph build_stokes_graph(const QuadraticDifferential& qd,
                               const TraceOptions& opt) {
    StokesGraph g;
    g.phase = opt.phase;
    auto specs = collect_specs(qd, opt.phase);
    g.rays.resize(specs.size());
    // Traces are independent and each writes its own slot, so the result is
    // identical to the serial builder regardless of scheduling.
    const int n = static_cast<int>(specs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(available_threads())
#endif
    for (int i = 0; i < n; ++i) g.rays[i] = trace_spec(qd, specs[i], opt);
    return g;
}

}  // namespace stokes::geom
