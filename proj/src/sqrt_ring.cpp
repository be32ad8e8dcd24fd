#include "stokes/core/sqrt_ring.hpp"

#include "stokes/core/errors.hpp"

namespace stokes::core {

SqrtRingElement SqrtRing::derivative(const SqrtRingElement& x) const {
    RationalFunction half_log = q0_.derivative() / (RationalFunction::constant(2.0) * q0_);
    return {x.a.derivative(), x.b.derivative() + x.b * half_log};
}

SqrtRingElement SqrtRing::div_by_2root(const SqrtRingElement& x, int sigma) const {
    if (sigma != 1 && sigma != -1) throw RingDivisionFailure("sigma must be +-1");
    Cplx s = (double)sigma;
    // (a + b w) / (2 sigma w) = sigma*b/2 + (sigma*a/(2 q0)) w
    return {0.5 * s * x.b, (0.5 * s * x.a) / q0_};
}

}  // namespace stokes::core
