#pragma once
#include <functional>
#include <vector>

#include "stokes/core/branch_track.hpp"

namespace stokes::core {

// int sqrt(f) dz along a path, branch-continued from the start. Zeros of f of
// any integrable order are allowed at the two endpoints (the adaptive
// quadrature grades into them); an interior zero raises BranchPointAt. The
// overall sign follows the principal branch at the start of the path, so
// callers normalize it against their own convention.
Cplx sqrt_path_integral(std::function<Cplx(Cplx)> f, const ComplexPath& path,
                        double tol = 1e-11);

Cplx sqrt_polyline_integral(std::function<Cplx(Cplx)> f,
                            const std::vector<Cplx>& pts, double tol = 1e-11);

}  // namespace stokes::core
