#pragma once
#include <functional>

#include "stokes/core/path.hpp"

namespace stokes::core {

// Integrand receives the global path parameter s (for branch lookups) and the point z.
using PathIntegrand = std::function<Cplx(double s, Cplx z)>;

struct QuadratureOptions {
    double tol = 1e-10;   // absolute error target for the whole path
    int max_depth = 48;   // bisection depth cap per segment
};

// Adaptive contour integral of f dz along the path.
// Each smooth arc is integrated by 15-point Gauss-Legendre panels with the
// embedded 7-point rule as error estimate; panels split until the local
// estimate fits an error budget proportional to panel length, or reaches the
// roundoff floor set by the overall magnitude of the integral (integrable
// endpoint singularities on short chords bottom out there).
Cplx path_integral(const PathIntegrand& f, const ComplexPath& path,
                   const QuadratureOptions& opt = {});

// Convenience overload for integrands that ignore the parameter.
Cplx path_integral(const std::function<Cplx(Cplx)>& f, const ComplexPath& path,
                   const QuadratureOptions& opt = {});

}  // namespace stokes::core
