#pragma once
#include "stokes/core/polynomial.hpp"

namespace stokes::core {

struct RootCluster {
    Cplx value;
    int multiplicity = 1;
};

// All roots of p with multiplicities. Aberth-Ehrlich simultaneous iteration,
// then clustering: two converged iterates belong to one root of multiplicity m
// when they sit within ~tol^{1/m} of each other (a perturbation eps of a
// multiple root splits it by eps^{1/m}).
// Throws NonConvergence after max iterations, std::invalid_argument for the
// zero polynomial. Sum of multiplicities equals degree(p).
std::vector<RootCluster> poly_roots(const Polynomial& p, double tol = 1e-12);

// Convenience: roots flattened with repetition by multiplicity.
std::vector<Cplx> poly_roots_flat(const Polynomial& p, double tol = 1e-12);

}  // namespace stokes::core
