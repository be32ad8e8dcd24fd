#include "stokes/core/rational.hpp"

#include <cmath>
#include <vector>

#include "stokes/core/errors.hpp"
#include "stokes/core/roots.hpp"

namespace stokes::core {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw RingDivisionFailure("zero denominator");
    Cplx lead = den_.lead();
    num_ = (1.0 / lead) * num_;
    den_ = (1.0 / lead) * den_;
    if (num_.is_zero()) den_ = Polynomial::constant(1.0);
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                            den_ * den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw RingDivisionFailure("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::reduced(double tol) const {
    if (num_.is_zero()) return RationalFunction();
    if (den_.degree() == 0 && num_.degree() <= 0) return *this;
    std::vector<Cplx> rn = poly_roots_flat(num_);
    std::vector<Cplx> rd = poly_roots_flat(den_);
    std::vector<bool> used(rn.size(), false);
    std::vector<Cplx> keep_d;
    for (auto& r : rd) {
        int best = -1;
        double bestd = 1e300;
        for (size_t i = 0; i < rn.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(rn[i] - r);
            if (d < bestd) {
                bestd = d;
                best = (int)i;
            }
        }
        if (best >= 0 && bestd <= tol * std::max(1.0, std::abs(r)))
            used[best] = true;
        else
            keep_d.push_back(r);
    }
    std::vector<Cplx> keep_n;
    for (size_t i = 0; i < rn.size(); ++i)
        if (!used[i]) keep_n.push_back(rn[i]);
    return RationalFunction(Polynomial::from_roots(keep_n, num_.lead()),
                            Polynomial::from_roots(keep_d, den_.lead()));
}

}  // namespace stokes::core
