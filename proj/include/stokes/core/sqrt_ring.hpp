#pragma once
#include "stokes/core/rational.hpp"

namespace stokes::core {

// a(x) + b(x) * sqrt(q0(x)) with rational a, b over a fixed rational q0.
struct SqrtRingElement {
    RationalFunction a, b;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

class SqrtRing {
  public:
    explicit SqrtRing(RationalFunction q0) : q0_(std::move(q0)) {}
    const RationalFunction& q0() const { return q0_; }

    static SqrtRingElement rational(RationalFunction a) { return {std::move(a), {}}; }
    // sign * sqrt(q0) itself
    static SqrtRingElement root(Cplx sign_coeff) {
        return {{}, RationalFunction::constant(sign_coeff)};
    }

    SqrtRingElement add(const SqrtRingElement& x, const SqrtRingElement& y) const {
        return {x.a + y.a, x.b + y.b};
    }
    SqrtRingElement sub(const SqrtRingElement& x, const SqrtRingElement& y) const {
        return {x.a - y.a, x.b - y.b};
    }
    SqrtRingElement mul(const SqrtRingElement& x, const SqrtRingElement& y) const {
        return {x.a * y.a + x.b * y.b * q0_, x.a * y.b + x.b * y.a};
    }
    SqrtRingElement scale(Cplx c, const SqrtRingElement& x) const {
        return {c * x.a, c * x.b};
    }

    // d/dx, using (sqrt q0)' = q0'/(2 q0) * sqrt(q0)
    SqrtRingElement derivative(const SqrtRingElement& x) const;

    // x / (2 * sigma * sqrt(q0)), sigma = +-1; exact in the ring
    SqrtRingElement div_by_2root(const SqrtRingElement& x, int sigma) const;

    SqrtRingElement reduced(const SqrtRingElement& x, double tol = 1e-9) const {
        return {x.a.reduced(tol), x.b.reduced(tol)};
    }

    // evaluate with an externally chosen branch value w = sqrt(q0(z))
    Cplx eval(const SqrtRingElement& x, Cplx z, Cplx w) const {
        return x.a.eval(z) + x.b.eval(z) * w;
    }

  private:
    RationalFunction q0_;
};

}  // namespace stokes::core
