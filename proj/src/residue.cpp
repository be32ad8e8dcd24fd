#include "stokes/core/residue.hpp"

#include <cmath>

#include "stokes/core/branch_track.hpp"
#include "stokes/core/errors.hpp"

namespace stokes::core {
namespace {

constexpr double PI = 3.14159265358979323846;
constexpr int M0 = 64, MMAX = 1 << 15;

Cplx unit(double th) { return Cplx(std::cos(th), std::sin(th)); }

// trapezoid estimate of c_{-1} = (1/M) sum f_j * rho * e^{i th_j}
Cplx contour_mean_once(const Fn& f, Cplx p, double rho, int M) {
    Cplx acc = 0.0;
    for (int j = 0; j < M; ++j) {
        Cplx e = unit(2.0 * PI * j / M);
        acc += f(p + rho * e) * e;
    }
    return acc * (rho / (double)M);
}

Cplx contour_mean(const Fn& f, Cplx p, double rho) {
    Cplx prev = contour_mean_once(f, p, rho, M0);
    for (int M = 2 * M0; M <= MMAX; M *= 2) {
        Cplx cur = contour_mean_once(f, p, rho, M);
        if (std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    throw NonConvergence("contour sampling did not converge");
}

// tracked sqrt samples on the circle; returns false if the sampling cannot
// resolve the branch (caller doubles M), throws if the branch fails to close
bool tracked_circle(const Fn& q, Cplx p, double rho, int sign, int M,
                    std::vector<Cplx>& out) {
    out.assign(M, 0.0);
    SqrtTracker tr;
    for (int j = 0; j < M; ++j) {
        Cplx w = tr.step(q(p + rho * unit(2.0 * PI * j / M)));
        if (j == 0 && sign < 0) {
            w = -w;
            tr.seed(w);
        }
        out[j] = w;
    }
    double wscale = 0.0;
    for (auto& w : out) wscale = std::max(wscale, std::abs(w));
    if (wscale == 0.0) return true;
    for (int j = 0; j < M; ++j) {
        if (std::abs(out[j]) < 1e-9 * wscale)
            throw BranchPointAt(p + rho * unit(2.0 * PI * j / M),
                                "zero of q on residue contour");
        Cplx wp = out[j], wn = out[(j + 1) % M];
        double d_same = std::abs(wn - wp), d_flip = std::abs(wn + wp);
        if (std::min(d_same, d_flip) > 0.5 * std::max(d_same, d_flip)) return false;
        // the wrap step closes the loop: continuation must land on out[0] itself
        if (j + 1 == M && d_flip < d_same)
            throw BranchPointAt(p, "branch of sqrt does not close around contour");
    }
    return true;
}

Cplx sqrt_contour_mean(const Fn& q, const Fn& mult, Cplx p, double rho, int sign) {
    Cplx prev = 0.0;
    bool have_prev = false;
    for (int M = M0; M <= MMAX; M *= 2) {
        std::vector<Cplx> w;
        if (!tracked_circle(q, p, rho, sign, M, w)) continue;
        Cplx acc = 0.0;
        double amax = 0.0;
        for (int j = 0; j < M; ++j) {
            Cplx e = unit(2.0 * PI * j / M);
            Cplx term = mult(p + rho * e) * w[j];
            amax = std::max(amax, std::abs(term));
            acc += term * e;
        }
        acc *= rho / (double)M;
        // high-order poles make |term| ~ rho^{-k/2} with the residue O(1); the
        // successive means then wobble at the evaluation roundoff, so accept
        // once the difference is at that floor
        double floor_ = 100.0 * 2.22e-16 * amax * rho;
        if (have_prev &&
            std::abs(acc - prev) <= std::max(1e-12 * std::max(1.0, std::abs(acc)), floor_))
            return acc;
        prev = acc;
        have_prev = true;
    }
    throw NonConvergence("sqrt contour sampling did not converge");
}

void check_pair(Cplx a, Cplx b, double tol, const char* what) {
    if (std::abs(a - b) > tol * std::max(1.0, std::abs(a)))
        throw ToleranceNotMet(std::string(what) + ": two-radius residue mismatch");
}

}  // namespace

std::vector<Cplx> laurent_coeffs(const Fn& f, Cplx p, double rho, int kmin, int kmax) {
    std::vector<Cplx> prev, cur;
    for (int M = M0; M <= MMAX; M *= 2) {
        cur.assign(kmax - kmin + 1, 0.0);
        for (int j = 0; j < M; ++j) {
            double th = 2.0 * PI * j / M;
            Cplx fv = f(p + rho * unit(th));
            for (int k = kmin; k <= kmax; ++k)
                cur[k - kmin] += fv * std::pow(rho, -k) * unit(-k * th);
        }
        for (auto& c : cur) c /= (double)M;
        if (!prev.empty()) {
            double scale = 0.0, diff = 0.0;
            for (size_t i = 0; i < cur.size(); ++i) {
                scale = std::max(scale, std::abs(cur[i]));
                diff = std::max(diff, std::abs(cur[i] - prev[i]));
            }
            if (diff <= 1e-11 * std::max(1.0, scale)) return cur;
        }
        prev = cur;
    }
    throw NonConvergence("Laurent sampling did not converge");
}

Cplx circle_residue(const Fn& f, Cplx p, double rho, double consistency_tol) {
    Cplx r1 = contour_mean(f, p, rho);
    Cplx r2 = contour_mean(f, p, 2.0 * rho);
    check_pair(r1, r2, consistency_tol, "residue");
    return r1;
}

Cplx residue_at_infinity(const Fn& f, double R, double consistency_tol) {
    Cplx r1 = -contour_mean(f, Cplx(0.0), R);
    Cplx r2 = -contour_mean(f, Cplx(0.0), 2.0 * R);
    check_pair(r1, r2, consistency_tol, "residue at infinity");
    return r1;
}

bool pole_order_consistent(const Fn& f, Cplx p, double rho, int order, double tol) {
    auto c = laurent_coeffs(f, p, rho, -(order + 2), -(order < 1 ? 1 : order));
    // entries 0 and 1 sit below the declared order and must vanish
    double scale = 0.0;
    for (auto& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return true;
    return std::abs(c[0]) <= tol * scale && std::abs(c[1]) <= tol * scale;
}

Cplx sqrt_circle_residue(const Fn& q, const Fn& mult, Cplx p, double rho, int branch_sign,
                         double consistency_tol) {
    Cplx r1 = sqrt_contour_mean(q, mult, p, rho, branch_sign);
    // keep the same branch on the outer circle: seed consistency is by sign
    // relative to principal at angle 0, which may differ between radii, so
    // compare up to overall sign
    Cplx r2 = sqrt_contour_mean(q, mult, p, 2.0 * rho, branch_sign);
    if (std::abs(r1 - r2) > std::abs(r1 + r2)) r2 = -r2;
    check_pair(r1, r2, consistency_tol, "sqrt residue");
    return r1;
}

Cplx sqrt_circle_residue(const Fn& q, Cplx p, double rho, int branch_sign,
                         double consistency_tol) {
    return sqrt_circle_residue(q, [](Cplx) { return Cplx(1.0); }, p, rho, branch_sign,
                               consistency_tol);
}

Cplx sqrt_residue_at_infinity(const Fn& q, const Fn& mult, double R, int branch_sign,
                              double consistency_tol) {
    Cplx r1 = -sqrt_contour_mean(q, mult, Cplx(0.0), R, branch_sign);
    Cplx r2 = -sqrt_contour_mean(q, mult, Cplx(0.0), 2.0 * R, branch_sign);
    if (std::abs(r1 - r2) > std::abs(r1 + r2)) r2 = -r2;
    check_pair(r1, r2, consistency_tol, "sqrt residue at infinity");
    return r1;
}

Cplx sqrt_residue_at_infinity(const Fn& q, double R, int branch_sign,
                              double consistency_tol) {
    return sqrt_residue_at_infinity(q, [](Cplx) { return Cplx(1.0); }, R, branch_sign,
                                    consistency_tol);
}

}  // namespace stokes::core
