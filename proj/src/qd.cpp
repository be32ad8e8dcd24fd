#include "stokes/geom/qd.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/core/errors.hpp"

namespace stokes::geom {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double QuadraticDifferential::scale() const {
    double s = 1.0;
    for (const auto& f : features) s = std::max(s, std::abs(f.z));
    return s;
}

double QuadraticDifferential::min_gap() const {
    if (features.size() < 2) return scale();
    double g = 1e300;
    for (std::size_t i = 0; i < features.size(); ++i)
        for (std::size_t j = i + 1; j < features.size(); ++j)
            g = std::min(g, std::abs(features[i].z - features[j].z));
    return g;
}

double QuadraticDifferential::gap_at(int i) const {
    if (features.size() < 2) return scale();
    double g = 1e300;
    for (std::size_t j = 0; j < features.size(); ++j)
        if (static_cast<int>(j) != i)
            g = std::min(g, std::abs(features[i].z - features[j].z));
    return g;
}

int QuadraticDifferential::nearest_feature(Cplx z, double* dist) const {
    int best = -1;
    double d = 1e300;
    for (std::size_t i = 0; i < features.size(); ++i) {
        double di = std::abs(z - features[i].z);
        if (di < d) {
            d = di;
            best = static_cast<int>(i);
        }
    }
    if (dist) *dist = d;
    return best;
}

void verify_features(const QuadraticDifferential& qd) {
    for (std::size_t i = 0; i < qd.features.size(); ++i) {
        const Feature& f = qd.features[i];
        double r1 = 1e-3 * qd.gap_at(static_cast<int>(i));
        double r2 = 0.5 * r1;
        // Mean slope of log|q| between two probe circles; subleading terms
        // contribute O(r/gap) ~ 1e-3, far below the 0.05 acceptance band.
        double acc = 0.0;
        const int K = 8;
        for (int k = 0; k < K; ++k) {
            Cplx e = std::polar(1.0, 2.0 * kPi * (k + 0.137) / K);
            double a1 = std::abs(qd.q(f.z + r1 * e));
            double a2 = std::abs(qd.q(f.z + r2 * e));
            if (a1 == 0.0 || a2 == 0.0)
                throw ToleranceNotMet("q vanishes on a feature probe circle");
            acc += std::log(a1 / a2) / std::log(r1 / r2);
        }
        double m_est = acc / K;
        if (std::abs(m_est - f.order) > 0.05)
            throw ToleranceNotMet("declared feature order does not match local growth of q");
    }
}

namespace {

// zeta(theta) = int_0^r sqrt(q) along the radial segment from feature fi.
// Geometric panels toward the center handle the integrable endpoint power
// t^{m/2}; the innermost stretch [0, eps] is closed with the local power law
// int_0^eps c t^{m/2} dt = w(eps) eps 2/(m+2). Branch sign of sqrt is
// arbitrary per call: only zeta^2 is consumed.
Cplx radial_zeta(const QuadraticDifferential& qd, int fi, double r, double theta) {
    static const double gl7x[7] = {-0.9491079123427585, -0.7415311855993945,
                                   -0.4058451513773972, 0.0,
                                   0.4058451513773972,  0.7415311855993945,
                                   0.9491079123427585};
    static const double gl7w[7] = {0.1294849661688697, 0.2797053914892766,
                                   0.3818300505051189, 0.4179591836734694,
                                   0.3818300505051189, 0.2797053914892766,
                                   0.1294849661688697};
    const Feature& f = qd.features[fi];
    const Cplx dir = std::polar(1.0, theta);
    const double rho = 0.45;
    const int K = 26;  // r * rho^K ~ 1e-9 r
    double eps = r * std::pow(rho, K);

    Cplx w_prev = std::sqrt(qd.q(f.z + eps * dir));
    Cplx zeta = w_prev * eps * (2.0 / (f.order + 2));
    // March panels inner to outer, keeping sqrt on one branch along the ray.
    for (int k = K - 1; k >= 0; --k) {
        double a = r * std::pow(rho, k + 1);
        double b = r * std::pow(rho, k);
        Cplx acc = 0.0;
        for (int j = 0; j < 7; ++j) {
            double t = 0.5 * (a + b) + 0.5 * (b - a) * gl7x[j];
            Cplx w = std::sqrt(qd.q(f.z + t * dir));
            if (std::norm(w + w_prev) < std::norm(w - w_prev)) w = -w;
            w_prev = w;
            acc += gl7w[j] * w;
        }
        zeta += acc * (0.5 * (b - a));
    }
    return zeta * dir;
}

}  // namespace

std::vector<double> ray_directions(const QuadraticDifferential& qd, int fi,
                                   double phase, double* probe_radius) {
    const Feature& f = qd.features[fi];
    if (!f.emits())
        throw std::invalid_argument("feature emits no trajectories");
    const Cplx rot = std::polar(1.0, 2.0 * phase);
    double r = 0.08 * qd.gap_at(fi);

    for (int attempt = 0; attempt < 4; ++attempt, r *= 0.5) {
        const int NG = 720;
        // The grid is offset so that zeros of Im at symmetric angles (0, pi/2,
        // ...) fall strictly inside brackets instead of on nodes.
        auto node = [&](int i) { return 2.0 * kPi * (i + 0.1234567) / NG; };
        std::vector<Cplx> h(NG);
        for (int i = 0; i < NG; ++i) {
            Cplx zt = radial_zeta(qd, fi, r, node(i));
            h[i] = rot * zt * zt;
        }
        std::vector<double> rays;
        for (int i = 0; i < NG; ++i) {
            int j = (i + 1) % NG;
            double gi = h[i].imag(), gj = h[j].imag();
            if (gi == 0.0) gi = 1e-300;  // nudge exact zeros into a bracket
            if (gi * gj >= 0.0) continue;
            double lo = node(i), hi = node(i + 1);
            double glo = gi;
            Cplx hmid = 0.0;
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (lo + hi);
                Cplx zt = radial_zeta(qd, fi, r, mid);
                hmid = rot * zt * zt;
                if ((hmid.imag() > 0.0) == (glo > 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            // Re > 0 selects the trajectory arms; Re < 0 is the orthogonal
            // foliation. The sheet ambiguity of zeta cancels in zeta^2.
            if (hmid.real() > 0.0) rays.push_back(0.5 * (lo + hi));
        }
        for (double& a : rays) a = std::fmod(a + 2.0 * kPi, 2.0 * kPi);
        std::sort(rays.begin(), rays.end());
        std::vector<double> uniq;
        for (double a : rays)
            if (uniq.empty() || a - uniq.back() > 1e-8) uniq.push_back(a);
        if (uniq.size() >= 2 && uniq.back() - uniq.front() > 2.0 * kPi - 1e-8)
            uniq.pop_back();
        rays.swap(uniq);
        if (static_cast<int>(rays.size()) == f.ray_count()) {
            if (probe_radius) *probe_radius = r;
            return rays;
        }
        // Another feature's arm may cross the probe circle; shrink and retry.
    }
    throw NonConvergence("trajectory direction count at feature does not match its order");
}

}  // namespace stokes::geom
