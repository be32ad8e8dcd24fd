#pragma once
#include <vector>

#include "stokes/core/polynomial.hpp"

namespace stokes::core {

// Solves A x = b by Gaussian elimination with partial pivoting (A square).
std::vector<Cplx> gauss_solve(std::vector<std::vector<Cplx>> A, std::vector<Cplx> b);

// Least squares via normal equations (rows >= cols, well-conditioned use only).
std::vector<Cplx> least_squares(const std::vector<std::vector<Cplx>>& A,
                                const std::vector<Cplx>& b);

// Fits a polynomial of the given degree through sample values; returns the
// polynomial and the maximum fit residual.
Polynomial fit_polynomial(const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                          int degree, double* max_residual = nullptr);

}  // namespace stokes::core
