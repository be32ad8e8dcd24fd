#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "stokes/core/errors.hpp"
#include "stokes/core/path.hpp"
#include "stokes/geom/stokes_graph.hpp"
#include "stokes/painleve/instance.hpp"

using namespace stokes;
using geom::Cplx;
using geom::QuadraticDifferential;
using geom::TraceResult;

namespace {
constexpr double kPi = 3.14159265358979323846;
const Cplx I(0.0, 1.0);

QuadraticDifferential pure_power(int m) {
    QuadraticDifferential qd;
    qd.q = [m](Cplx z) { return std::pow(z, m); };
    qd.features = {{Cplx(0.0), m}};
    return qd;
}
}  // namespace

TEST_CASE("ray directions on pure powers match the closed form") {
    // q = z^m: rays of e^{2i phase} q dz^2 sit at (2 pi k - 2 phase)/(m+2).
    for (int m : {-1, 1, 2, 3}) {
        for (double phase : {0.0, 0.3}) {
            auto qd = pure_power(m);
            auto got = geom::ray_directions(qd, 0, phase);
            REQUIRE(static_cast<int>(got.size()) == m + 2);
            std::vector<double> want;
            for (int k = 0; k < m + 2; ++k) {
                double a = (2.0 * kPi * k - 2.0 * phase) / (m + 2);
                want.push_back(std::fmod(a + 4.0 * kPi, 2.0 * kPi));
            }
            std::sort(want.begin(), want.end());
            for (int k = 0; k < m + 2; ++k)
                CHECK(std::abs(got[k] - want[k]) < 1e-9);
        }
    }
}

TEST_CASE("feature order verification accepts truth and rejects lies") {
    auto qd = pure_power(2);
    CHECK_NOTHROW(geom::verify_features(qd));
    qd.features[0].order = 3;
    CHECK_THROWS_AS(geom::verify_features(qd), ToleranceNotMet);

    QuadraticDifferential qp;
    qp.q = [](Cplx z) { return 1.0 / (z * z); };
    qp.features = {{Cplx(0.0), -2}};
    CHECK_NOTHROW(geom::verify_features(qp));
}

TEST_CASE("u-plane feature inventory and ray counts") {
    painleve::Equation eq2(painleve::Eq::P_II, {{"c", I}});
    auto qd = painleve::uplane_qd(painleve::uplane_map(eq2));
    REQUIRE(qd.features.size() == 4);  // three order-3 zeros and the u=0 pole
    geom::verify_features(qd);
    int emitting = 0;
    for (std::size_t i = 0; i < qd.features.size(); ++i) {
        if (!qd.features[i].emits()) continue;
        ++emitting;
        auto rays = geom::ray_directions(qd, static_cast<int>(i), 0.0);
        CHECK(rays.size() == 5);
        CHECK(std::is_sorted(rays.begin(), rays.end()));
    }
    CHECK(emitting == 3);  // the order-5 pole emits nothing

    painleve::Equation eq7(painleve::Eq::P_III_D7, {{"c", I}});
    auto qd7 = painleve::uplane_qd(painleve::uplane_map(eq7));
    REQUIRE(qd7.features.size() == 3);
    geom::verify_features(qd7);
    int total_rays = 0;
    for (std::size_t i = 0; i < qd7.features.size(); ++i)
        if (qd7.features[i].emits())
            total_rays += static_cast<int>(geom::ray_directions(qd7, static_cast<int>(i), 0.0).size());
    CHECK(total_rays == 6);  // 5 from the order-3 zero, 1 from the simple pole
}

TEST_CASE("real saddle segment of the first equation is traced from both ends") {
    // At t = -6 the reduced potential is 4(x-1)^2 (x+2): the interval [-2, 1]
    // is a critical trajectory joining the simple and the double zero.
    painleve::Equation eq(painleve::Eq::P_I, {});
    auto qd = painleve::xplane_qd(eq, Cplx(-6.0), Cplx(1.0));
    REQUIRE(qd.features.size() == 2);
    CHECK(std::abs(qd.features[0].z - Cplx(1.0)) < 1e-9);
    CHECK(std::abs(qd.features[1].z - Cplx(-2.0)) < 1e-9);
    geom::verify_features(qd);

    auto g = geom::build_stokes_graph(qd, {});
    REQUIRE(g.rays.size() == 7);  // 4 from the double zero, 3 from the simple

    int captured = 0;
    for (const auto& r : g.rays) {
        if (r.result.end != TraceResult::End::Feature) {
            CHECK(r.result.end == TraceResult::End::Escape);
            continue;
        }
        ++captured;
        CHECK(r.result.feature != r.spec.feature);
        // the connecting trajectory is the real interval
        for (Cplx p : r.result.points) {
            CHECK(std::abs(p.imag()) < 1e-7);
            CHECK(p.real() > -2.001);
            CHECK(p.real() < 1.001);
        }
    }
    CHECK(captured == 2);
}

TEST_CASE("trajectories retrace under reversal") {
    painleve::Equation eq2(painleve::Eq::P_II, {{"c", I}});
    auto qd = painleve::uplane_qd(painleve::uplane_map(eq2));
    auto g = geom::build_stokes_graph_serial(qd, {});

    const geom::TracedRay* esc = nullptr;
    for (const auto& r : g.rays)
        if (r.result.end == TraceResult::End::Escape && r.result.points.size() > 120) {
            esc = &r;
            break;
        }
    REQUIRE(esc != nullptr);

    std::size_t cut = 100;
    std::vector<Cplx> fwd(esc->result.points.begin(),
                          esc->result.points.begin() + cut + 1);
    Cplx back_dir = fwd[cut - 1] - fwd[cut];
    auto rev = geom::trace_trajectory(qd, fwd[cut], back_dir, {});

    // Trajectories into a zero are unstable: the roundoff-level Im(zeta)
    // offset delta expands to a standoff ~ delta^{2/(m+2)}, so the default
    // capture disc may be skimmed rather than hit. The retrace must still
    // come that close and overlay the forward polyline.
    int src = esc->spec.feature;
    CHECK(rev.min_dist[src] < 5e-3);

    std::size_t kmin = 0;
    double dmin = 1e300;
    for (std::size_t k = 0; k < rev.points.size(); ++k) {
        double d = std::abs(rev.points[k] - qd.features[src].z);
        if (d < dmin) {
            dmin = d;
            kmin = k;
        }
    }
    std::vector<Cplx> rev_head(rev.points.begin(), rev.points.begin() + kmin + 1);
    double hd = core::hausdorff(fwd, rev_head);
    CHECK(hd < 10.0 * 0.008 * qd.scale());

    // With a capture disc wider than the standoff the retrace does end at
    // its source feature.
    geom::TraceOptions wide;
    wide.stop_frac = 2e-3;
    auto rev2 = geom::trace_trajectory(qd, fwd[cut], back_dir, wide);
    REQUIRE(rev2.end == TraceResult::End::Feature);
    CHECK(rev2.feature == src);
}

TEST_CASE("capture distances are recorded as near misses") {
    painleve::Equation eq(painleve::Eq::P_I, {});
    auto qd = painleve::xplane_qd(eq, Cplx(-6.0), Cplx(1.0));
    auto g = geom::build_stokes_graph(qd, {});
    for (const auto& r : g.rays) {
        REQUIRE(r.result.min_dist.size() == qd.features.size());
        // every trace starts on its probe circle, so its own min_dist is
        // bounded by that radius
        CHECK(r.result.min_dist[r.spec.feature] <= r.spec.probe_radius + 1e-12);
        if (r.result.end == TraceResult::End::Feature)
            CHECK(r.result.min_dist[r.result.feature] < 1e-3);
    }
}
