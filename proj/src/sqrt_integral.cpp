#include "stokes/core/sqrt_integral.hpp"

#include "stokes/core/integrate.hpp"

namespace stokes::core {

Cplx sqrt_path_integral(std::function<Cplx(Cplx)> f, const ComplexPath& path,
                        double tol) {
    TrackedSqrt ts(std::move(f), path);
    return path_integral(ts.integrand(), path, {tol, 48});
}

Cplx sqrt_polyline_integral(std::function<Cplx(Cplx)> f,
                            const std::vector<Cplx>& pts, double tol) {
    return sqrt_path_integral(std::move(f), ComplexPath(pts), tol);
}

}  // namespace stokes::core
