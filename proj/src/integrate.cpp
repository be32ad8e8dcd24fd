#include "stokes/core/integrate.hpp"

#include <cmath>
#include <vector>

#include "stokes/core/errors.hpp"

namespace stokes::core {
namespace {

// Gauss-Legendre nodes/weights on [-1,1]; the 7-point rule shares no nodes with
// the 15-point one, so the error estimate costs a separate (cheap) pass.
constexpr int N15 = 15, N7 = 7;
constexpr double X15[N15] = {
    -9.87992518020485377e-01, -9.37273392400705951e-01, -8.48206583410427206e-01,
    -7.24417731360170070e-01, -5.70972172608538830e-01, -3.94151347077563385e-01,
    -2.01194093997434514e-01, 0.0,                      2.01194093997434514e-01,
    3.94151347077563385e-01,  5.70972172608538830e-01,  7.24417731360170070e-01,
    8.48206583410427206e-01,  9.37273392400705951e-01,  9.87992518020485377e-01};
constexpr double W15[N15] = {
    3.07532419961186465e-02, 7.03660474881080689e-02, 1.07159220467171773e-01,
    1.39570677926153908e-01, 1.66269205816993781e-01, 1.86161000015561878e-01,
    1.98431485327111246e-01, 2.02578241925560898e-01, 1.98431485327111246e-01,
    1.86161000015561878e-01, 1.66269205816993781e-01, 1.39570677926153908e-01,
    1.07159220467171773e-01, 7.03660474881080689e-02, 3.07532419961186465e-02};
constexpr double X7[N7] = {-9.49107912342758486e-01, -7.41531185599394460e-01,
                           -4.05845151377397184e-01, 0.0,
                           4.05845151377397184e-01,  7.41531185599394460e-01,
                           9.49107912342758486e-01};
constexpr double W7[N7] = {1.29484966168870647e-01, 2.79705391489276589e-01,
                           3.81830050505118312e-01, 4.17959183673468959e-01,
                           3.81830050505118312e-01, 2.79705391489276589e-01,
                           1.29484966168870647e-01};

struct SegQuad {
    const PathIntegrand* f;
    const PathSeg* seg;
    double s_lo, s_hi;  // global parameter range covered by this segment
    double abs_floor;   // roundoff floor from the whole-path magnitude

    double s_of(double u) const { return s_lo + u * (s_hi - s_lo); }

    Cplx panel(double u0, double u1, Cplx& coarse) const {
        double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
        Cplx fine = 0.0;
        for (int i = 0; i < N15; ++i) {
            double u = mid + half * X15[i];
            fine += W15[i] * (*f)(s_of(u), seg->point(u)) * seg->tangent(u);
        }
        Cplx c = 0.0;
        for (int i = 0; i < N7; ++i) {
            double u = mid + half * X7[i];
            c += W7[i] * (*f)(s_of(u), seg->point(u)) * seg->tangent(u);
        }
        coarse = c * half;
        return fine * half;
    }

    Cplx adaptive(double u0, double u1, double budget, int depth) const {
        Cplx coarse;
        Cplx fine = panel(u0, u1, coarse);
        double err = std::abs(fine - coarse);
        if (err <= budget || err <= abs_floor || err <= 1e-16 * std::abs(fine))
            return fine;
        if (depth <= 0)
            throw ToleranceNotMet("quadrature did not reach requested accuracy");
        double um = 0.5 * (u0 + u1);
        return adaptive(u0, um, 0.5 * budget, depth - 1) +
               adaptive(um, u1, 0.5 * budget, depth - 1);
    }
};

}  // namespace

Cplx path_integral(const PathIntegrand& f, const ComplexPath& path,
                   const QuadratureOptions& opt) {
    double total_len = path.length();
    const auto& segs = path.segments();
    std::vector<SegQuad> quads(segs.size());
    double rough = 0.0;  // sum of top-level panel moduli sets the value scale
    for (size_t i = 0; i < segs.size(); ++i) {
        SegQuad& q = quads[i];
        q.f = &f;
        q.seg = &segs[i];
        q.s_lo = path.seg_start_param(i);
        q.s_hi = (i + 1 < segs.size()) ? path.seg_start_param(i + 1) : 1.0;
        q.abs_floor = 0.0;
        Cplx coarse;
        rough += std::abs(q.panel(0.0, 1.0, coarse));
    }
    Cplx sum = 0.0;
    for (size_t i = 0; i < segs.size(); ++i) {
        quads[i].abs_floor = 1e-15 * rough;
        double budget = opt.tol * segs[i].chord_length() / total_len;
        sum += quads[i].adaptive(0.0, 1.0, budget, opt.max_depth);
    }
    return sum;
}

Cplx path_integral(const std::function<Cplx(Cplx)>& f, const ComplexPath& path,
                   const QuadratureOptions& opt) {
    return path_integral([&f](double, Cplx z) { return f(z); }, path, opt);
}

}  // namespace stokes::core
