#pragma once
#include "stokes/core/polynomial.hpp"

namespace stokes::core {

// num/den with den normalized monic; den == 1 for polynomials.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Polynomial::constant(1.0)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num)
        : RationalFunction(std::move(num), Polynomial::constant(1.0)) {}
    static RationalFunction constant(Cplx c) {
        return RationalFunction(Polynomial::constant(c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Cplx eval(Cplx z) const { return num_.eval(z) / den_.eval(z); }
    RationalFunction derivative() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;

    // cancels numerator/denominator roots that agree within tol (relative to
    // the root magnitude); rebuilt from the surviving roots
    RationalFunction reduced(double tol = 1e-9) const;

  private:
    Polynomial num_, den_;
};

inline RationalFunction operator*(Cplx c, const RationalFunction& r) {
    return RationalFunction::constant(c) * r;
}

}  // namespace stokes::core
