#include "stokes/core/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace stokes::core {

std::vector<Cplx> gauss_solve(std::vector<std::vector<Cplx>> A, std::vector<Cplx> b) {
    size_t n = A.size();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::abs(A[i][k]) > std::abs(A[piv][k])) piv = i;
        if (std::abs(A[piv][k]) == 0.0) throw std::runtime_error("singular linear system");
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (size_t i = k + 1; i < n; ++i) {
            Cplx f = A[i][k] / A[k][k];
            for (size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Cplx> x(n);
    for (size_t i = n; i-- > 0;) {
        Cplx s = b[i];
        for (size_t j = i + 1; j < n; ++j) s -= A[i][j] * x[j];
        x[i] = s / A[i][i];
    }
    return x;
}

std::vector<Cplx> least_squares(const std::vector<std::vector<Cplx>>& A,
                                const std::vector<Cplx>& b) {
    size_t m = A.size(), n = A.empty() ? 0 : A[0].size();
    std::vector<std::vector<Cplx>> N(n, std::vector<Cplx>(n, 0.0));
    std::vector<Cplx> rhs(n, 0.0);
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i < n; ++i) {
            Cplx ai = std::conj(A[r][i]);
            for (size_t j = 0; j < n; ++j) N[i][j] += ai * A[r][j];
            rhs[i] += ai * b[r];
        }
    return gauss_solve(std::move(N), std::move(rhs));
}

Polynomial fit_polynomial(const std::vector<Cplx>& xs, const std::vector<Cplx>& ys,
                          int degree, double* max_residual) {
    std::vector<std::vector<Cplx>> A(xs.size(), std::vector<Cplx>(degree + 1));
    for (size_t r = 0; r < xs.size(); ++r) {
        Cplx p = 1.0;
        for (int k = 0; k <= degree; ++k) {
            A[r][k] = p;
            p *= xs[r];
        }
    }
    std::vector<Cplx> coef = least_squares(A, ys);
    Polynomial poly(coef);
    if (max_residual) {
        double worst = 0.0;
        for (size_t r = 0; r < xs.size(); ++r)
            worst = std::max(worst, std::abs(poly.eval(xs[r]) - ys[r]));
        *max_residual = worst;
    }
    return poly;
}

}  // namespace stokes::core
