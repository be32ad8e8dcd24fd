#include "stokes/core/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace stokes::core {

void Polynomial::strip_exact_zeros() {
    while (!c_.empty() && c_.back() == Cplx{0.0}) c_.pop_back();
}

Polynomial Polynomial::monomial(int k, Cplx a) {
    std::vector<Cplx> c(static_cast<size_t>(k) + 1, Cplx{0.0});
    c.back() = a;
    return Polynomial{std::move(c)};
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Cplx, int>>& roots, Cplx lead) {
    Polynomial p = Polynomial::constant(lead);
    for (const auto& [r, m] : roots) {
        Polynomial lin{std::vector<Cplx>{-r, Cplx{1.0}}};
        for (int i = 0; i < m; ++i) p = p * lin;
    }
    return p;
}

Polynomial Polynomial::from_roots(const std::vector<Cplx>& roots, Cplx lead) {
    std::vector<std::pair<Cplx, int>> rm;
    for (auto& r : roots) rm.push_back({r, 1});
    return from_roots(rm, lead);
}

double Polynomial::norm_inf() const {
    double m = 0.0;
    for (const auto& a : c_) m = std::max(m, std::abs(a));
    return m;
}

Cplx Polynomial::eval(Cplx x) const {
    Cplx v{0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial{};
    std::vector<Cplx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Polynomial{std::move(d)};
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Cplx> r(std::max(c_.size(), o.c_.size()), Cplx{0.0});
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Polynomial{std::move(r)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Cplx> r(std::max(c_.size(), o.c_.size()), Cplx{0.0});
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
    return Polynomial{std::move(r)};
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial{};
    std::vector<Cplx> r(c_.size() + o.c_.size() - 1, Cplx{0.0});
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial{std::move(r)};
}

Polynomial Polynomial::operator*(Cplx s) const {
    std::vector<Cplx> r = c_;
    for (auto& a : r) a *= s;
    return Polynomial{std::move(r)};
}

Polynomial Polynomial::deflate(Cplx r) const {
    if (c_.size() <= 1) return Polynomial{};
    std::vector<Cplx> q(c_.size() - 1);
    Cplx carry = c_.back();
    for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + carry * r;
    }
    return Polynomial{std::move(q)};
}

Polynomial Polynomial::trimmed(double rel_tol) const {
    double cut = rel_tol * norm_inf();
    std::vector<Cplx> r = c_;
    while (!r.empty() && std::abs(r.back()) <= cut) r.pop_back();
    return Polynomial{std::move(r)};
}

}  // namespace stokes::core
