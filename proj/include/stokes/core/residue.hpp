#pragma once
#include <functional>
#include <vector>

#include "stokes/core/polynomial.hpp"

namespace stokes::core {

using Fn = std::function<Cplx(Cplx)>;

// Laurent coefficients c_k (kmin <= k <= kmax) of a single-valued f around p,
// sampled on |z-p| = rho with trapezoid sums, doubling M until stable.
std::vector<Cplx> laurent_coeffs(const Fn& f, Cplx p, double rho, int kmin, int kmax);

// residue of single-valued f at p; evaluates at rho and 2*rho and requires the
// two values to agree within consistency_tol (abs, relative above 1).
Cplx circle_residue(const Fn& f, Cplx p, double rho, double consistency_tol = 1e-9);

// residue at infinity of f dz: -(1/2pi i) * contour integral over |z| = R ccw.
Cplx residue_at_infinity(const Fn& f, double R, double consistency_tol = 1e-9);

// checks that Laurent coefficients below -order are negligible at radius rho
bool pole_order_consistent(const Fn& f, Cplx p, double rho, int order, double tol = 1e-8);

// (1/2pi i) * contour integral of mult(z)*sqrt(q(z)) over |z-p| = rho, ccw.
// branch_sign (+1/-1) picks the branch relative to the principal sqrt at the
// starting point p + rho. Throws BranchPointAt if the branch does not close
// around the contour (odd branching inside).
Cplx sqrt_circle_residue(const Fn& q, const Fn& mult, Cplx p, double rho, int branch_sign,
                         double consistency_tol = 1e-9);
Cplx sqrt_circle_residue(const Fn& q, Cplx p, double rho, int branch_sign,
                         double consistency_tol = 1e-9);

// same for the residue at infinity of mult*sqrt(q) dz; branch seeded at z = R.
Cplx sqrt_residue_at_infinity(const Fn& q, const Fn& mult, double R, int branch_sign,
                              double consistency_tol = 1e-9);
Cplx sqrt_residue_at_infinity(const Fn& q, double R, int branch_sign,
                              double consistency_tol = 1e-9);

}  // namespace stokes::core
