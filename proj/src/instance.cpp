#include "stokes/painleve/instance.hpp"

namespace stokes::painleve {

geom::QuadraticDifferential uplane_qd(const UPlaneMap& map) {
    geom::QuadraticDifferential qd;
    qd.q = map.quad;
    for (const auto& [z, m] : map.zeros) qd.features.push_back({z, m});
    for (const auto& [p, m] : map.poles) qd.features.push_back({p, -m});
    return qd;
}

geom::QuadraticDifferential xplane_qd(const Equation& eq, Cplx t, Cplx lam0) {
    geom::QuadraticDifferential qd;
    // pointwise Q0, not the expanded num/den polynomials: Horner on the
    // expanded denominator loses the high-order poles within ~1e-4 of them
    qd.q = [eq, t, lam0](Cplx x) { return eq.Q0(x, t, lam0); };
    qd.features.push_back({lam0, 2});
    for (Cplx z : eq.branch_zeros(t, lam0)) qd.features.push_back({z, 1});
    for (const auto& p : eq.poles(t))
        if (!p.at_infinity) qd.features.push_back({p.location, -p.order});
    return qd;
}

}  // namespace stokes::painleve
