#pragma once
#include <complex>
#include <initializer_list>
#include <vector>

namespace stokes::core {

using Cplx = std::complex<double>;

// Dense univariate polynomial, coefficients in ascending order: c[k] * x^k.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Cplx> coeffs) : c_(std::move(coeffs)) { strip_exact_zeros(); }
    Polynomial(std::initializer_list<Cplx> coeffs) : c_(coeffs) { strip_exact_zeros(); }

    static Polynomial constant(Cplx a) { return Polynomial{std::vector<Cplx>{a}}; }
    static Polynomial monomial(int k, Cplx a = 1.0);
    // prod (x - r_i)^{m_i}, times lead
    static Polynomial from_roots(const std::vector<std::pair<Cplx, int>>& roots, Cplx lead = 1.0);
    static Polynomial from_roots(const std::vector<Cplx>& roots, Cplx lead = 1.0);

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Cplx>& coeffs() const { return c_; }
    Cplx coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Cplx{0.0}; }
    Cplx lead() const { return c_.empty() ? Cplx{0.0} : c_.back(); }
    double norm_inf() const;

    Cplx eval(Cplx x) const;  // Horner
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Cplx s) const;
    Polynomial operator-() const { return *this * Cplx{-1.0}; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Quotient of exact division by (x - r); the remainder is discarded
    // (callers deflate known roots).
    Polynomial deflate(Cplx r) const;

    // Drop trailing coefficients below rel_tol * norm_inf().
    Polynomial trimmed(double rel_tol) const;

  private:
    void strip_exact_zeros();
    std::vector<Cplx> c_;
};

inline Polynomial operator*(Cplx s, const Polynomial& p) { return p * s; }

}  // namespace stokes::core
