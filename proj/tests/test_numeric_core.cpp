#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "stokes/core/branch_track.hpp"
#include "stokes/core/errors.hpp"
#include "stokes/core/integrate.hpp"
#include "stokes/core/linalg.hpp"
#include "stokes/core/path.hpp"
#include "stokes/core/polynomial.hpp"
#include "stokes/core/residue.hpp"
#include "stokes/core/roots.hpp"

using namespace stokes;
using core::Cplx;
using core::ComplexPath;
using core::Polynomial;

static const double PI = 3.14159265358979323846;

static double dist_to_nearest(Cplx z, const std::vector<Cplx>& set) {
    double best = 1e300;
    for (auto& s : set) best = std::min(best, std::abs(z - s));
    return best;
}

TEST_CASE("polynomial basics") {
    Polynomial p({-2.0, 0.0, 1.0});  // x^2 - 2
    CHECK(p.degree() == 2);
    CHECK(std::abs(p.eval(2.0) - Cplx(2.0)) < 1e-15);
    Polynomial d = p.derivative();
    CHECK(d.degree() == 1);
    CHECK(std::abs(d.eval(3.0) - Cplx(6.0)) < 1e-15);
    Polynomial q = Polynomial::from_roots({1.0, -1.0}, 2.0);  // 2(x^2-1)
    CHECK(std::abs(q.eval(2.0) - Cplx(6.0)) < 1e-12);
    Polynomial prod = p * q;
    CHECK(prod.degree() == 4);
    CHECK(std::abs(prod.eval(1.3) - p.eval(1.3) * q.eval(1.3)) < 1e-12);
    Polynomial defl = q.deflate(1.0);
    CHECK(defl.degree() == 1);
    CHECK(std::abs(defl.eval(-1.0)) < 1e-12);
}

TEST_CASE("cube roots of unity") {
    auto roots = core::poly_roots(Polynomial({-1.0, 0.0, 0.0, 1.0}));
    REQUIRE(roots.size() == 3);
    std::vector<Cplx> expected = {1.0, Cplx(-0.5, std::sqrt(3.0) / 2),
                                  Cplx(-0.5, -std::sqrt(3.0) / 2)};
    for (auto& r : roots) {
        CHECK(r.multiplicity == 1);
        CHECK(dist_to_nearest(r.value, expected) < 1e-12);
    }
}

TEST_CASE("roots of 4u^3 = i match reference values") {
    auto roots = core::poly_roots_flat(Polynomial({Cplx(0.0, -1.0), 0.0, 0.0, 4.0}));
    REQUIRE(roots.size() == 3);
    std::vector<Cplx> expected = {{-0.5455618179858603, 0.31498026247371835},
                                  {0.0, -0.6299605249474363},
                                  {0.5455618179858606, 0.3149802624737182}};
    for (auto& r : roots) CHECK(dist_to_nearest(r, expected) < 1e-10);
}

TEST_CASE("double root clustering") {
    // (x-2)^2 (x+1)
    Polynomial p = Polynomial::from_roots({2.0, 2.0, -1.0}, 1.0);
    auto roots = core::poly_roots(p);
    REQUIRE(roots.size() == 2);
    bool saw_double = false, saw_simple = false;
    for (auto& r : roots) {
        if (r.multiplicity == 2) {
            saw_double = true;
            CHECK(std::abs(r.value - Cplx(2.0)) < 1e-7);
        }
        if (r.multiplicity == 1) {
            saw_simple = true;
            CHECK(std::abs(r.value - Cplx(-1.0)) < 1e-10);
        }
    }
    CHECK(saw_double);
    CHECK(saw_simple);
}

TEST_CASE("random root reconstruction") {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + (int)(rng() % 5);
        std::vector<Cplx> rs;
        for (int i = 0; i < n; ++i) {
            Cplx cand;
            bool ok;
            do {  // keep roots separated so multiplicities stay 1
                cand = Cplx(U(rng), U(rng));
                ok = true;
                for (auto& r : rs)
                    if (std::abs(r - cand) < 0.15) ok = false;
            } while (!ok);
            rs.push_back(cand);
        }
        Polynomial p = Polynomial::from_roots(rs, Cplx(U(rng), U(rng)) + Cplx(2.0));
        auto back = core::poly_roots_flat(p);
        REQUIRE(back.size() == rs.size());
        for (auto& b : back) CHECK(dist_to_nearest(b, rs) < 1e-9);
    }
}

TEST_CASE("zero polynomial has no roots") {
    CHECK_THROWS_AS(core::poly_roots(Polynomial()), std::invalid_argument);
    auto r = core::poly_roots(Polynomial({0.0, 0.0, 1.0}));  // x^2
    REQUIRE(r.size() == 1);
    CHECK(r.front().multiplicity == 2);
    CHECK(std::abs(r.front().value) < 1e-12);
}

TEST_CASE("path joins and lengths") {
    ComplexPath circ = ComplexPath::circle(Cplx(1.0, 1.0), 2.0);
    CHECK(circ.closed());
    CHECK(std::abs(circ.length() - 4.0 * PI) < 1e-12);
    ComplexPath line = ComplexPath::line(0.0, Cplx(3.0, 4.0));
    CHECK(std::abs(line.length() - 5.0) < 1e-14);
    CHECK(!line.closed());
    ComplexPath rev = line.reversed();
    CHECK(std::abs(rev.start() - Cplx(3.0, 4.0)) < 1e-14);
    std::vector<core::PathSeg> bad(2);
    bad[0].a = 0.0;
    bad[0].b = 1.0;
    bad[1].a = 5.0;
    bad[1].b = 6.0;
    CHECK_THROWS_AS(ComplexPath{bad}, std::invalid_argument);
}

TEST_CASE("Cauchy integral of 1/z") {
    Cplx I = core::path_integral([](Cplx z) { return 1.0 / z; },
                                 ComplexPath::circle(0.0, 1.0));
    CHECK(std::abs(I - Cplx(0.0, 2.0 * PI)) < 1e-10);
    // clockwise flips the sign
    Cplx J = core::path_integral([](Cplx z) { return 1.0 / z; },
                                 ComplexPath::circle(0.0, 1.0, false));
    CHECK(std::abs(J + Cplx(0.0, 2.0 * PI)) < 1e-10);
}

TEST_CASE("integral additivity") {
    auto f = [](Cplx z) { return std::exp(z) / (z - Cplx(0.0, 3.0)); };
    core::QuadratureOptions opt;
    opt.tol = 1e-11;
    Cplx a = -1.0, b = Cplx(0.5, 0.7), c = Cplx(2.0, -0.4);
    Cplx I1 = core::path_integral(f, ComplexPath::line(a, b), opt);
    Cplx I2 = core::path_integral(f, ComplexPath::line(b, c), opt);
    Cplx I3 = core::path_integral(f, ComplexPath::line(a, c), opt);
    CHECK(std::abs(I1 + I2 - I3) < 2e-11);
}

TEST_CASE("tracked sqrt closure") {
    auto q = [](Cplx z) { return z * z - 1.0; };
    core::TrackedSqrt both(q, ComplexPath::circle(0.0, 3.0));
    CHECK(both.closure_sign() == 1);
    core::TrackedSqrt one(q, ComplexPath::circle(1.0, 0.5));
    CHECK(one.closure_sign() == -1);
}

TEST_CASE("tracked sqrt integral around both branch points") {
    // oint sqrt(z^2-1) dz over |z|=2: sqrt(z^2-1) = z - 1/(2z) + O(z^-3),
    // so the integral is -pi i (times the branch sign)
    auto q = [](Cplx z) { return z * z - 1.0; };
    ComplexPath circ = ComplexPath::circle(0.0, 2.0);
    core::TrackedSqrt w(q, circ);
    Cplx I = core::path_integral(w.integrand(), circ);
    double m = std::min(std::abs(I - Cplx(0.0, -PI)), std::abs(I + Cplx(0.0, -PI)));
    CHECK(m < 1e-9);
}

TEST_CASE("Laurent coefficients") {
    auto f = [](Cplx z) { return 1.0 / (z * z) + 2.0 / z + 3.0 + 4.0 * z; };
    auto c = core::laurent_coeffs(f, 0.0, 0.5, -3, 1);
    CHECK(std::abs(c[0]) < 1e-10);            // c_{-3}
    CHECK(std::abs(c[1] - 1.0) < 1e-10);      // c_{-2}
    CHECK(std::abs(c[2] - 2.0) < 1e-10);      // c_{-1}
    CHECK(std::abs(c[3] - 3.0) < 1e-10);
    CHECK(std::abs(c[4] - 4.0) < 1e-10);
    CHECK(core::pole_order_consistent(f, 0.0, 0.5, 2));
    CHECK(!core::pole_order_consistent(f, 0.0, 0.5, 1));
}

TEST_CASE("simple residues") {
    auto f = [](Cplx z) { return std::exp(z) / z; };
    CHECK(std::abs(core::circle_residue(f, 0.0, 0.3) - 1.0) < 1e-10);
    // f = z + 5/z at infinity: residue -5
    auto g = [](Cplx z) { return z + 5.0 / z; };
    CHECK(std::abs(core::residue_at_infinity(g, 10.0) + 5.0) < 1e-9);
}

TEST_CASE("sqrt residue on small circle") {
    // q = (3u-2c)^3/(u (u-c)^2) at u=c has sqrt residue +-c
    Cplx c(0.0, 1.0);
    auto q = [c](Cplx u) {
        Cplx z = 3.0 * u - 2.0 * c;
        return z * z * z / (u * (u - c) * (u - c));
    };
    Cplx r = core::sqrt_circle_residue(q, c, 0.05, +1);
    CHECK(std::min(std::abs(r - c), std::abs(r + c)) < 1e-8);
}

TEST_CASE("sqrt residue at infinity") {
    // q = c - z^2/4: sqrt ~ +-i(z/2 - c/z + ...), residue at infinity +-ic
    Cplx c(0.7, 0.4);
    auto q = [c](Cplx z) { return c - z * z / 4.0; };
    Cplx r = core::sqrt_residue_at_infinity(q, 12.0, +1);
    Cplx ic = Cplx(0.0, 1.0) * c;
    CHECK(std::min(std::abs(r - ic), std::abs(r + ic)) < 1e-7);
}

TEST_CASE("odd branching inside contour is rejected") {
    auto q = [](Cplx z) { return z; };
    CHECK_THROWS_AS(core::sqrt_circle_residue(q, 0.0, 0.5, +1), BranchPointAt);
}

TEST_CASE("linear solve and polynomial fit") {
    std::vector<std::vector<Cplx>> A = {{2.0, 1.0}, {1.0, 3.0}};
    auto x = core::gauss_solve(A, {Cplx(5.0), Cplx(10.0)});
    CHECK(std::abs(x[0] - 1.0) < 1e-13);
    CHECK(std::abs(x[1] - 3.0) < 1e-13);
    std::vector<Cplx> xs, ys;
    Polynomial target({1.0, Cplx(0.0, 2.0), -3.0});
    for (int k = 0; k < 12; ++k) {
        Cplx z = Cplx(std::cos(0.5 * k), std::sin(0.7 * k));
        xs.push_back(z);
        ys.push_back(target.eval(z));
    }
    double resid = 0.0;
    Polynomial fit = core::fit_polynomial(xs, ys, 2, &resid);
    CHECK(resid < 1e-12);
    CHECK(std::abs(fit.coeff(1) - Cplx(0.0, 2.0)) < 1e-12);
}

TEST_CASE("hausdorff distance") {
    std::vector<Cplx> A = {0.0, 1.0, 2.0};
    std::vector<Cplx> B = {0.0, 1.0, Cplx(2.0, 0.3)};
    CHECK(std::abs(core::hausdorff(A, B) - 0.3) < 1e-15);
}
