#include "stokes/painleve/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stokes/core/errors.hpp"
#include "stokes/core/linalg.hpp"
#include "stokes/core/roots.hpp"

namespace stokes::painleve {

using core::Polynomial;

const char* eq_name(Eq e) {
    switch (e) {
        case Eq::P_I: return "P_I";
        case Eq::P_II: return "P_II";
        case Eq::P_III_D6: return "P_III_D6";
        case Eq::P_III_D7: return "P_III_D7";
        case Eq::P_III_D8: return "P_III_D8";
        case Eq::P_IV: return "P_IV";
        case Eq::P_V: return "P_V";
        case Eq::P_VI: return "P_VI";
    }
    return "?";
}

Eq eq_from_name(const std::string& name) {
    for (Eq e : {Eq::P_I, Eq::P_II, Eq::P_III_D6, Eq::P_III_D7, Eq::P_III_D8, Eq::P_IV,
                 Eq::P_V, Eq::P_VI})
        if (name == eq_name(e)) return e;
    throw std::invalid_argument("unknown equation: " + name);
}

std::vector<std::string> param_names(Eq e) {
    switch (e) {
        case Eq::P_I: return {};
        case Eq::P_II: return {"c"};
        case Eq::P_III_D6: return {"c0", "cinf"};
        case Eq::P_III_D7: return {"c"};
        case Eq::P_III_D8: return {};
        case Eq::P_IV: return {"c0", "cinf"};
        case Eq::P_V: return {"c0", "c1", "cinf"};
        case Eq::P_VI: return {"c0", "c1", "ct", "cinf"};
    }
    return {};
}

Equation::Equation(Eq tag, std::map<std::string, Cplx> params)
    : tag_(tag), params_(std::move(params)) {
    for (const auto& name : param_names(tag_))
        if (!params_.count(name))
            throw std::invalid_argument(std::string("missing parameter ") + name +
                                        " for " + eq_name(tag_));
    for (const auto& [k, v] : params_) {
        if (k == "c") c_ = v;
        else if (k == "c0") c0_ = v;
        else if (k == "c1") c1_ = v;
        else if (k == "ct") ct_ = v;
        else if (k == "cinf") ci_ = v;
        else throw std::invalid_argument("unknown parameter " + k);
    }
}

Cplx Equation::param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw std::invalid_argument("no parameter " + name);
    return it->second;
}

namespace {
// shared factor-and-product pieces for P_V / P_VI
struct AB {
    Cplx A, Ap, App, B, Bp, Bpp;
};

AB ab_V(Cplx l, Cplx t, Cplx c0, Cplx c1, Cplx ci) {
    AB r;
    Cplx lm = l - 1.0;
    r.A = 2.0 * l * lm * lm / (t * t);
    r.Ap = 2.0 * lm * (3.0 * l - 1.0) / (t * t);
    r.App = (12.0 * l - 8.0) / (t * t);
    r.B = ci * ci / 4.0 - c0 * c0 / (4.0 * l * l) - c1 * t / (lm * lm) -
          (t * t / 4.0) * (l + 1.0) / (lm * lm * lm);
    r.Bp = c0 * c0 / (2.0 * l * l * l) + 2.0 * c1 * t / (lm * lm * lm) +
           (t * t / 2.0) * (l + 2.0) / (lm * lm * lm * lm);
    r.Bpp = -1.5 * c0 * c0 / (l * l * l * l) - 6.0 * c1 * t / (lm * lm * lm * lm) -
            1.5 * t * t * (l + 3.0) / (lm * lm * lm * lm * lm);
    return r;
}

AB ab_VI(Cplx l, Cplx t, Cplx c0, Cplx c1, Cplx ct, Cplx ci) {
    AB r;
    Cplx lm = l - 1.0, lt = l - t, d = t * t * (t - 1.0) * (t - 1.0);
    r.A = 2.0 * l * lm * lt / d;
    r.Ap = 2.0 * (3.0 * l * l - 2.0 * (1.0 + t) * l + t) / d;
    r.App = 2.0 * (6.0 * l - 2.0 * (1.0 + t)) / d;
    r.B = ci * ci / 4.0 - (c0 * c0 / 4.0) * t / (l * l) +
          (c1 * c1 / 4.0) * (t - 1.0) / (lm * lm) -
          (ct * ct / 4.0) * t * (t - 1.0) / (lt * lt);
    r.Bp = (c0 * c0 / 2.0) * t / (l * l * l) - (c1 * c1 / 2.0) * (t - 1.0) / (lm * lm * lm) +
           (ct * ct / 2.0) * t * (t - 1.0) / (lt * lt * lt);
    r.Bpp = -(1.5 * c0 * c0) * t / (l * l * l * l) +
            (1.5 * c1 * c1) * (t - 1.0) / (lm * lm * lm * lm) -
            (1.5 * ct * ct) * t * (t - 1.0) / (lt * lt * lt * lt);
    return r;
}
}  // namespace

Cplx Equation::F(Cplx l, Cplx t) const {
    switch (tag_) {
        case Eq::P_I: return 6.0 * l * l + t;
        case Eq::P_II: return 2.0 * l * l * l + t * l + c_;
        case Eq::P_III_D6:
            return l * l * l / (t * t) - ci_ * l * l / (t * t) + c0_ / t - 1.0 / l;
        case Eq::P_III_D7: return -2.0 * l * l / (t * t) + c_ / t - 1.0 / l;
        case Eq::P_III_D8: return l * l / (t * t) - 1.0 / t;
        case Eq::P_IV:
            return 1.5 * l * l * l + 4.0 * t * l * l + (2.0 * t * t - 2.0 * ci_) * l -
                   2.0 * c0_ * c0_ / l;
        case Eq::P_V: {
            auto r = ab_V(l, t, c0_, c1_, ci_);
            return r.A * r.B;
        }
        case Eq::P_VI: {
            auto r = ab_VI(l, t, c0_, c1_, ct_, ci_);
            return r.A * r.B;
        }
    }
    return 0.0;
}

Cplx Equation::F1(Cplx l, Cplx t) const {
    switch (tag_) {
        case Eq::P_I: return 12.0 * l;
        case Eq::P_II: return 6.0 * l * l + t;
        case Eq::P_III_D6:
            return 3.0 * l * l / (t * t) - 2.0 * ci_ * l / (t * t) + 1.0 / (l * l);
        case Eq::P_III_D7: return -4.0 * l / (t * t) + 1.0 / (l * l);
        case Eq::P_III_D8: return 2.0 * l / (t * t);
        case Eq::P_IV:
            return 4.5 * l * l + 8.0 * t * l + 2.0 * t * t - 2.0 * ci_ +
                   2.0 * c0_ * c0_ / (l * l);
        case Eq::P_V: {
            auto r = ab_V(l, t, c0_, c1_, ci_);
            return r.Ap * r.B + r.A * r.Bp;
        }
        case Eq::P_VI: {
            auto r = ab_VI(l, t, c0_, c1_, ct_, ci_);
            return r.Ap * r.B + r.A * r.Bp;
        }
    }
    return 0.0;
}

Cplx Equation::F2(Cplx l, Cplx t) const {
    switch (tag_) {
        case Eq::P_I: return 12.0;
        case Eq::P_II: return 12.0 * l;
        case Eq::P_III_D6:
            return 6.0 * l / (t * t) - 2.0 * ci_ / (t * t) - 2.0 / (l * l * l);
        case Eq::P_III_D7: return -4.0 / (t * t) - 2.0 / (l * l * l);
        case Eq::P_III_D8: return 2.0 / (t * t);
        case Eq::P_IV: return 9.0 * l + 8.0 * t - 4.0 * c0_ * c0_ / (l * l * l);
        case Eq::P_V: {
            auto r = ab_V(l, t, c0_, c1_, ci_);
            return r.App * r.B + 2.0 * r.Ap * r.Bp + r.A * r.Bpp;
        }
        case Eq::P_VI: {
            auto r = ab_VI(l, t, c0_, c1_, ct_, ci_);
            return r.App * r.B + 2.0 * r.Ap * r.Bp + r.A * r.Bpp;
        }
    }
    return 0.0;
}

Cplx Equation::M(Cplx l, Cplx t) const {
    switch (tag_) {
        case Eq::P_I:
        case Eq::P_II: return 0.5;
        case Eq::P_III_D6:
        case Eq::P_III_D7:
        case Eq::P_III_D8: return l * l / t;
        case Eq::P_IV: return 2.0 * l;
        case Eq::P_V: return l * (l - 1.0) * (l - 1.0) / t;
        case Eq::P_VI: return l * (l - 1.0) * (l - t) / (t * (t - 1.0));
    }
    return 0.0;
}

Cplx Equation::V(Cplx x, Cplx t) const {
    switch (tag_) {
        case Eq::P_I: return 4.0 * x * x * x + 2.0 * t * x;
        case Eq::P_II: return x * x * x * x + t * x * x + 2.0 * c_ * x;
        case Eq::P_III_D6:
            return t * t / (4.0 * x * x * x * x) - c0_ * t / (2.0 * x * x * x) -
                   ci_ / (2.0 * x) + 0.25;
        case Eq::P_III_D7:
            return t * t / (4.0 * x * x * x * x) - c_ * t / (2.0 * x * x * x) -
                   c_ * c_ / (4.0 * x * x) - 1.0 / x;
        case Eq::P_III_D8: return t / (2.0 * x * x * x) + 1.0 / (2.0 * x);
        case Eq::P_IV: {
            Cplx s = (x + 2.0 * t) / 4.0;
            return c0_ * c0_ / (4.0 * x * x) - ci_ / 4.0 + s * s;
        }
        case Eq::P_V: {
            Cplx xm = x - 1.0;
            return c0_ * c0_ / (4.0 * x * x) + t * t / (4.0 * xm * xm * xm * xm) +
                   c1_ * t / (xm * xm * xm) + (ci_ * ci_ - c0_ * c0_) / (4.0 * xm * xm);
        }
        case Eq::P_VI: {
            Cplx xm = x - 1.0, xt = x - t;
            return c0_ * c0_ / (4.0 * x * x) + c1_ * c1_ / (4.0 * xm * xm) +
                   ct_ * ct_ / (4.0 * xt * xt) +
                   (ci_ * ci_ - (c0_ * c0_ + c1_ * c1_ + ct_ * ct_)) /
                       (4.0 * x * xm);
        }
    }
    return 0.0;
}

Cplx Equation::C(Cplx x, Cplx t) const {
    switch (tag_) {
        case Eq::P_I:
        case Eq::P_II: return 1.0;
        case Eq::P_III_D6:
        case Eq::P_III_D7:
        case Eq::P_III_D8: return t / (2.0 * x * x);
        case Eq::P_IV: return 1.0 / (4.0 * x);
        case Eq::P_V: return t / (2.0 * x * (x - 1.0) * (x - 1.0));
        case Eq::P_VI:
            return t * (t - 1.0) / (2.0 * x * (x - 1.0) * (x - t));
    }
    return 0.0;
}

Polynomial Equation::lambda_poly(Cplx t) const {
    auto asc = [](std::vector<Cplx> desc) {
        std::reverse(desc.begin(), desc.end());
        return Polynomial(desc);
    };
    switch (tag_) {
        case Eq::P_I: return asc({6.0, 0.0, t});
        case Eq::P_II: return asc({2.0, 0.0, t, c_});
        case Eq::P_III_D6: return asc({1.0, -ci_, 0.0, c0_ * t, -t * t});
        case Eq::P_III_D7: return asc({-2.0, 0.0, c_ * t, -t * t});
        case Eq::P_III_D8: return asc({1.0, 0.0, -t});
        case Eq::P_IV:
            return asc({1.5, 4.0 * t, 2.0 * t * t - 2.0 * ci_, 0.0, -2.0 * c0_ * c0_});
        case Eq::P_V: {
            // ci^2 l^2 (l-1)^3 - c0^2 (l-1)^3 - 4 c1 t l^2 (l-1) - t^2 l^2 (l+1)
            Polynomial l2 = Polynomial::monomial(2);
            Polynomial lm1({-1.0, 1.0});
            Polynomial lm1_3 = lm1 * lm1 * lm1;
            return (ci_ * ci_) * (l2 * lm1_3) - (c0_ * c0_) * lm1_3 -
                   (4.0 * c1_ * t) * (l2 * lm1) - (t * t) * (l2 * Polynomial({1.0, 1.0}));
        }
        case Eq::P_VI: {
            // ci^2 l^2(l-1)^2(l-t)^2 - c0^2 t (l-1)^2(l-t)^2
            //  + c1^2 (t-1) l^2(l-t)^2 - ct^2 t(t-1) l^2(l-1)^2
            Polynomial l2 = Polynomial::monomial(2);
            Polynomial m1({-1.0, 1.0}), mt({-t, 1.0});
            Polynomial m1_2 = m1 * m1, mt_2 = mt * mt;
            return (ci_ * ci_) * (l2 * m1_2 * mt_2) - (c0_ * c0_ * t) * (m1_2 * mt_2) +
                   (c1_ * c1_ * (t - 1.0)) * (l2 * mt_2) -
                   (ct_ * ct_ * t * (t - 1.0)) * (l2 * m1_2);
        }
    }
    return Polynomial();
}

std::vector<Cplx> Equation::lambda_branches(Cplx t) const {
    return core::poly_roots_flat(lambda_poly(t));
}

Cplx Equation::Q0(Cplx x, Cplx t, Cplx lam0) const {
    return V(x, t) - (M(lam0, t) / M(x, t)) * V(lam0, t);
}

int Equation::r_degree() const {
    switch (tag_) {
        case Eq::P_I:
        case Eq::P_III_D7:
        case Eq::P_III_D8: return 1;
        default: return 2;
    }
}

core::Polynomial Equation::r_polynomial(Cplx t, Cplx lam0) const {
    // R = Q0 / (C^2 (x-lam0)^2) is a polynomial; fit it on a circle well away
    // from lam0 and the poles of Q0
    double scale = std::max({1.0, std::abs(lam0), std::abs(t)});
    const int NPTS = 24;
    std::vector<Cplx> xs, ys;
    for (int k = 0; k < NPTS; ++k) {
        double th = 2.0 * 3.14159265358979323846 * k / NPTS;
        Cplx x = (2.5 * scale + 1.7) * Cplx(std::cos(th), std::sin(th)) +
                 Cplx(0.31, 0.17);
        Cplx cc = C(x, t), dx = x - lam0;
        xs.push_back(x);
        ys.push_back(Q0(x, t, lam0) / (cc * cc * dx * dx));
    }
    double resid = 0.0;
    Polynomial R = core::fit_polynomial(xs, ys, r_degree(), &resid);
    double yscale = 1.0;
    for (auto& y : ys) yscale = std::max(yscale, std::abs(y));
    if (resid > 1e-8 * yscale)
        throw ToleranceNotMet("reduced potential is not polynomial after clearing");
    return R;
}

std::vector<Cplx> Equation::branch_zeros(Cplx t, Cplx lam0) const {
    return core::poly_roots_flat(r_polynomial(t, lam0));
}

std::vector<PoleInfo> Equation::poles(Cplx t) const {
    auto fin = [](Cplx loc, int order, Cplx res, const std::string& label) {
        PoleInfo p;
        p.location = loc;
        p.order = order;
        p.has_residue = true;
        p.residue = res;
        p.label = label;
        return p;
    };
    auto fin_silent = [](Cplx loc, int order, const std::string& label) {
        PoleInfo p;
        p.location = loc;
        p.order = order;
        p.label = label;
        return p;
    };
    auto inf = [](Cplx res) {
        PoleInfo p;
        p.at_infinity = true;
        p.has_residue = true;
        p.residue = res;
        p.label = "inf";
        return p;
    };
    switch (tag_) {
        case Eq::P_I: return {};
        case Eq::P_II: return {inf(c_)};
        case Eq::P_III_D6: return {fin(0.0, 4, c0_ / 2.0, "0"), inf(ci_ / 2.0)};
        case Eq::P_III_D7: return {fin(0.0, 4, c_ / 2.0, "0")};
        case Eq::P_III_D8: return {fin_silent(0.0, 3, "0")};  // odd order: no residue
        case Eq::P_IV: return {fin(0.0, 2, c0_ / 2.0, "0"), inf(ci_ / 2.0)};
        case Eq::P_V:
            return {fin(0.0, 2, c0_ / 2.0, "0"), fin(1.0, 4, c1_, "1"), inf(ci_ / 2.0)};
        case Eq::P_VI:
            return {fin(0.0, 2, c0_ / 2.0, "0"), fin(1.0, 2, c1_ / 2.0, "1"),
                    fin(t, 2, ct_ / 2.0, "t"), inf(ci_ / 2.0)};
    }
    return {};
}

std::vector<Cplx> Equation::t_singularities() const {
    switch (tag_) {
        case Eq::P_III_D6:
        case Eq::P_III_D7:
        case Eq::P_III_D8:
        case Eq::P_V: return {Cplx(0.0)};
        case Eq::P_VI: return {Cplx(0.0), Cplx(1.0)};
        default: return {};
    }
}

std::vector<Cplx> Equation::t_branch_points() const {
    if (tag_ == Eq::P_II) {
        // collisions at 4u^3 = c, t = -6u^2
        Cplx u0 = std::pow(c_ / 4.0, 1.0 / 3.0);
        std::vector<Cplx> out;
        Cplx w(-0.5, 0.8660254037844386);
        for (int k = 0; k < 3; ++k) {
            Cplx u = u0;
            for (int j = 0; j < k; ++j) u *= w;
            out.push_back(-6.0 * u * u);
        }
        return out;
    }
    if (tag_ == Eq::P_III_D7) {
        return {2.0 * c_ * c_ * c_ / 27.0};
    }
    // generic: sample the discriminant of lambda_poly on a circle, fit a
    // polynomial, and keep roots where two branches really collide
    double pscale = 1.0;
    for (auto& [k, v] : params_) pscale = std::max(pscale, std::abs(v));
    double R = 3.0 * pscale;
    const int NS = 64, DEG = 14;
    std::vector<Cplx> ts, ds;
    for (int k = 0; k < NS; ++k) {
        double th = 2.0 * 3.14159265358979323846 * k / NS;
        Cplx t = R * Cplx(std::cos(th), std::sin(th));
        auto roots = lambda_branches(t);
        Cplx disc = 1.0;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) {
                Cplx d = roots[i] - roots[j];
                disc *= d * d;
            }
        ts.push_back(t);
        ds.push_back(disc);
    }
    Polynomial fit = core::fit_polynomial(ts, ds, DEG, nullptr);
    std::vector<Cplx> out;
    for (Cplx cand : core::poly_roots_flat(fit.trimmed(1e-10))) {
        if (std::abs(cand) > 1.05 * R) continue;
        auto roots = lambda_branches(cand);
        double gap = 1e300, rscale = 1.0;
        for (size_t i = 0; i < roots.size(); ++i) {
            rscale = std::max(rscale, std::abs(roots[i]));
            for (size_t j = i + 1; j < roots.size(); ++j)
                gap = std::min(gap, std::abs(roots[i] - roots[j]));
        }
        if (gap > 1e-3 * rscale) continue;
        bool dup = false;
        for (auto& o : out)
            if (std::abs(o - cand) < 1e-6 * std::max(1.0, std::abs(o))) dup = true;
        if (!dup) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

core::RationalFunction q0_rational(const Equation& eq, Cplx t, Cplx lam0) {
    // Q0 = R(x) * C(x)^2 * (x - lam0)^2 with explicit rational C per equation
    Polynomial R = eq.r_polynomial(t, lam0);
    Polynomial dx2 = Polynomial({-lam0, 1.0}) * Polynomial({-lam0, 1.0});
    Polynomial cnum, cden;
    switch (eq.tag()) {
        case Eq::P_I:
        case Eq::P_II:
            cnum = Polynomial::constant(1.0);
            cden = Polynomial::constant(1.0);
            break;
        case Eq::P_III_D6:
        case Eq::P_III_D7:
        case Eq::P_III_D8:
            cnum = Polynomial::constant(t / 2.0);
            cden = Polynomial::monomial(2);
            break;
        case Eq::P_IV:
            cnum = Polynomial::constant(0.25);
            cden = Polynomial::monomial(1);
            break;
        case Eq::P_V:
            cnum = Polynomial::constant(t / 2.0);
            cden = Polynomial::monomial(1) * Polynomial({-1.0, 1.0}) *
                   Polynomial({-1.0, 1.0});
            break;
        case Eq::P_VI:
            cnum = Polynomial::constant(t * (t - 1.0) / 2.0);
            cden = Polynomial::monomial(1) * Polynomial({-1.0, 1.0}) *
                   Polynomial({-t, 1.0});
            break;
    }
    return core::RationalFunction(R * dx2 * cnum * cnum, cden * cden);
}

UPlaneMap uplane_map(const Equation& eq) {
    UPlaneMap m;
    if (eq.tag() == Eq::P_II) {
        Cplx c = eq.param("c");
        if (std::abs(c) < 1e-12)
            throw ZeroParameter("u-plane parametrization needs a nonzero parameter");
        m.quad = [c](Cplx u) {
            Cplx z = 4.0 * u * u * u - c;
            return z * z * z / (u * u * u * u * u);
        };
        m.t_of_u = [c](Cplx u) { return -(2.0 * u * u * u + c) / u; };
        m.lam0_of_u = [](Cplx u) { return u; };
        m.dt_du = [c](Cplx u) { return -4.0 * u + c / (u * u); };
        Cplx u0 = std::pow(c / 4.0, 1.0 / 3.0);
        Cplx w(-0.5, 0.8660254037844386);
        Cplx u = u0;
        for (int k = 0; k < 3; ++k) {
            m.zeros.push_back({u, 3});
            u *= w;
        }
        m.poles.push_back({Cplx(0.0), 5});
        return m;
    }
    if (eq.tag() == Eq::P_III_D7) {
        Cplx c = eq.param("c");
        if (std::abs(c) < 1e-12)
            throw ZeroParameter("u-plane parametrization needs a nonzero parameter");
        m.quad = [c](Cplx u) {
            Cplx z = 3.0 * u - 2.0 * c;
            return z * z * z / (u * (u - c) * (u - c));
        };
        m.t_of_u = [c](Cplx u) { return -u * u * (u - c) / 2.0; };
        m.lam0_of_u = [c](Cplx u) { return -u * (u - c) / 2.0; };
        m.dt_du = [c](Cplx u) { return -(3.0 * u * u - 2.0 * c * u) / 2.0; };
        m.zeros.push_back({2.0 * c / 3.0, 3});
        m.poles.push_back({Cplx(0.0), 1});
        m.poles.push_back({c, 2});
        return m;
    }
    throw std::invalid_argument("u-plane parametrization is available for P_II and P_III_D7");
}

}  // namespace stokes::painleve
