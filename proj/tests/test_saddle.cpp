#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "stokes/core/sqrt_integral.hpp"
#include "stokes/painleve/instance.hpp"
#include "stokes/saddle/segments.hpp"

using namespace stokes;
using geom::Cplx;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cplx I(0.0, 1.0);
}  // namespace

TEST_CASE("three equal saddle segments in the symmetric second-equation slice") {
    painleve::Equation eq(painleve::Eq::P_II, {{"c", I}});
    auto qd = painleve::uplane_qd(painleve::uplane_map(eq));
    auto g = geom::build_stokes_graph(qd, {});
    auto segs = saddle::detect_segments(qd, g);

    REQUIRE(segs.size() == 3);
    CHECK(segs[0].from == 0);
    CHECK(segs[0].to == 1);
    CHECK(segs[1].from == 0);
    CHECK(segs[1].to == 2);
    CHECK(segs[2].from == 1);
    CHECK(segs[2].to == 2);
    for (const auto& s : segs) {
        CHECK(!s.loop);
        CHECK(!s.near_degenerate);
        CHECK(s.im_residual <= 1e-8);
        CHECK(s.period.real() > 0.0);
    }
    // u -> omega u with omega^3 = 1 permutes the three turning points and
    // preserves quad du^2, so the three periods coincide.
    CHECK(std::abs(segs[0].period - segs[1].period) < 1e-8);
    CHECK(std::abs(segs[0].period - segs[2].period) < 1e-8);
}

TEST_CASE("loop around the residue pole in the D7 slice") {
    painleve::Equation eq(painleve::Eq::P_III_D7, {{"c", I}});
    auto qd = painleve::uplane_qd(painleve::uplane_map(eq));
    auto g = geom::build_stokes_graph(qd, {});
    auto segs = saddle::detect_segments(qd, g);

    REQUIRE(segs.size() == 1);
    const auto& s = segs[0];
    CHECK(s.loop);
    CHECK(s.from == 0);
    CHECK(s.to == 0);
    CHECK(s.im_residual <= 1e-8);
    REQUIRE(s.winding.size() == 3);
    CHECK(s.winding[1] == 0);  // does not enclose u = 0
    CHECK(s.winding[2] == 1);  // encloses the order-2 pole at u = c once

    // int sqrt(quad) around the order-2 pole at c equals 2 pi i times the
    // residue +-c; with c = i that is the real number 2 pi.
    CHECK(std::abs(s.period - Cplx(2.0 * kPi, 0.0)) < 1e-7);
}

TEST_CASE("generic parameters yield no segments and a visibly complex period") {
    painleve::Equation eq(painleve::Eq::P_II, {{"c", Cplx(0.3, 1.0)}});
    auto map = painleve::uplane_map(eq);
    auto qd = painleve::uplane_qd(map);
    auto g = geom::build_stokes_graph(qd, {});
    auto segs = saddle::detect_segments(qd, g);
    CHECK(segs.empty());

    // the would-be connection integral between two turning points is far from
    // real, so rejection is forced, not incidental
    Cplx u0 = map.zeros[0].first, u1 = map.zeros[1].first;
    Cplx P = core::sqrt_polyline_integral(qd.q, {u0, u1});
    CHECK(std::abs(P.imag()) > 10.0 * 1e-8);
}

TEST_CASE("detection is deterministic across the parallel and serial builders") {
    painleve::Equation eq(painleve::Eq::P_II, {{"c", I}});
    auto qd = painleve::uplane_qd(painleve::uplane_map(eq));
    auto gp = geom::build_stokes_graph(qd, {});
    auto gs = geom::build_stokes_graph_serial(qd, {});
    auto sp = saddle::detect_segments(qd, gp);
    auto ss = saddle::detect_segments(qd, gs);
    REQUIRE(sp.size() == ss.size());
    for (std::size_t i = 0; i < sp.size(); ++i) {
        CHECK(sp[i].period == ss[i].period);  // bit identical
        CHECK(sp[i].path.size() == ss[i].path.size());
    }
}
