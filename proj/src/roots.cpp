#include "stokes/core/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stokes/core/errors.hpp"

namespace stokes::core {

namespace {

// Cauchy-style inclusion radius for the initial circle of guesses.
double root_radius(const std::vector<Cplx>& c) {
    double lead = std::abs(c.back());
    double r = 0.0;
    for (size_t k = 0; k + 1 < c.size(); ++k) r = std::max(r, std::abs(c[k]) / lead);
    return 1.0 + r;
}

}  // namespace

std::vector<RootCluster> poly_roots(const Polynomial& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
    std::vector<Cplx> c = p.coeffs();

    // roots at zero come off directly
    int zero_mult = 0;
    while (zero_mult < static_cast<int>(c.size()) && c[zero_mult] == Cplx{0.0}) ++zero_mult;
    c.erase(c.begin(), c.begin() + zero_mult);

    const int n = static_cast<int>(c.size()) - 1;
    std::vector<RootCluster> out;
    if (zero_mult > 0) out.push_back({Cplx{0.0}, zero_mult});
    if (n <= 0) return out;

    Polynomial q{c};
    Polynomial dq = q.derivative();
    const double scale = root_radius(c);

    // initial guesses equidistributed on a circle, irrational angle offset so no
    // guess starts on a symmetry axis of the input
    std::vector<Cplx> z(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * i / n + 0.7390851332151607;
        z[i] = 0.8 * scale * Cplx{std::cos(th), std::sin(th)};
    }

    const int max_iter = 400;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Cplx pv = q.eval(z[i]);
            Cplx dv = dq.eval(z[i]);
            Cplx ratio;
            if (std::abs(dv) > 1e-300) {
                ratio = pv / dv;
            } else {
                // sitting on a critical point: nudge off
                z[i] += scale * Cplx{1e-6, 1e-6};
                max_step = scale;
                continue;
            }
            Cplx sum{0.0};
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    Cplx d = z[i] - z[j];
                    if (std::abs(d) < 1e-300) d = Cplx{1e-300, 0.0};
                    sum += 1.0 / d;
                }
            Cplx denom = 1.0 - ratio * sum;
            Cplx step = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14 * scale) converged = true;
        // random restart if an iterate escaped badly
        for (int i = 0; i < n; ++i)
            if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()) || std::abs(z[i]) > 1e6 * scale) {
                double th = 2.399963 * (i + 1) + 0.1 * iter;
                z[i] = 0.5 * scale * Cplx{std::cos(th), std::sin(th)};
                converged = false;
            }
    }
    if (!converged) {
        // accept if residuals are small anyway (Aberth stalls at ~eps^(1/m) for
        // multiple roots while the residual is long since below tolerance)
        double worst = 0.0;
        for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(q.eval(z[i])));
        double res_scale = q.norm_inf() * std::pow(scale, n);
        if (worst > 1e-8 * res_scale) throw NonConvergence("poly_roots: Aberth iteration did not converge");
    }

    // multiplicity clustering: merge while any two cluster centroids are within
    // the tol^{1/m} radius for the merged size m
    const double ctol = std::max(tol, 1e-13);
    std::vector<Cplx> centroid(z.begin(), z.end());
    std::vector<int> mult(n, 1);
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < centroid.size() && !merged; ++i)
            for (size_t j = i + 1; j < centroid.size() && !merged; ++j) {
                int m = mult[i] + mult[j];
                double radius = 3.0 * scale * std::pow(ctol, 1.0 / m);
                if (std::abs(centroid[i] - centroid[j]) < radius) {
                    centroid[i] = (centroid[i] * static_cast<double>(mult[i]) +
                                   centroid[j] * static_cast<double>(mult[j])) /
                                  static_cast<double>(m);
                    mult[i] = m;
                    centroid.erase(centroid.begin() + j);
                    mult.erase(mult.begin() + j);
                    merged = true;
                }
            }
    }

    // polish each cluster: a root of multiplicity m is a simple root of p^(m-1)
    for (size_t i = 0; i < centroid.size(); ++i) {
        Polynomial pm = q;
        for (int k = 1; k < mult[i]; ++k) pm = pm.derivative();
        Polynomial dpm = pm.derivative();
        Cplx x = centroid[i];
        for (int it = 0; it < 40; ++it) {
            Cplx dv = dpm.eval(x);
            if (std::abs(dv) < 1e-300) break;
            Cplx step = pm.eval(x) / dv;
            x -= step;
            if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        out.push_back({x, mult[i]});
    }

    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

std::vector<Cplx> poly_roots_flat(const Polynomial& p, double tol) {
    std::vector<Cplx> out;
    for (const auto& rc : poly_roots(p, tol))
        for (int k = 0; k < rc.multiplicity; ++k) out.push_back(rc.value);
    return out;
}

}  // namespace stokes::core
