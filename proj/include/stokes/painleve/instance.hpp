#pragma once
#include "stokes/geom/qd.hpp"
#include "stokes/painleve/catalog.hpp"

namespace stokes::painleve {

// Quadratic differential in the u plane of a parametrized t geometry.
geom::QuadraticDifferential uplane_qd(const UPlaneMap& map);

// Quadratic differential Q0(x) dx^2 on one lam0 branch at fixed t. Features
// are the double zero at lam0, the simple zeros of R, and the finite poles.
geom::QuadraticDifferential xplane_qd(const Equation& eq, Cplx t, Cplx lam0);

}  // namespace stokes::painleve
