#pragma once
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stokes/core/polynomial.hpp"
#include "stokes/core/rational.hpp"

namespace stokes::painleve {

using core::Cplx;

enum class Eq { P_I, P_II, P_III_D6, P_III_D7, P_III_D8, P_IV, P_V, P_VI };

const char* eq_name(Eq e);
Eq eq_from_name(const std::string& name);  // "P_I", "P_III_D7", ...
std::vector<std::string> param_names(Eq e);

// A finite pole of the reduced potential in x, or the point at infinity.
struct PoleInfo {
    bool at_infinity = false;
    Cplx location{0.0};
    int order = 0;       // pole order of Q0 (finite poles only)
    bool has_residue = false;
    Cplx residue{0.0};   // expected residue of sqrt(Q0) dx, up to overall sign
    std::string label;   // "0", "1", "t", "inf"
};

// One Painleve equation with fixed parameters; t stays a free argument.
class Equation {
  public:
    Equation(Eq tag, std::map<std::string, Cplx> params);

    Eq tag() const { return tag_; }
    const std::map<std::string, Cplx>& params() const { return params_; }
    Cplx param(const std::string& name) const;

    // classical-mechanics data entering the reduced potential
    Cplx F(Cplx lam, Cplx t) const;    // dt(lam0) locus: F(lam0, t) = 0
    Cplx F1(Cplx lam, Cplx t) const;   // dF/dlam
    Cplx F2(Cplx lam, Cplx t) const;   // d2F/dlam2
    Cplx M(Cplx lam, Cplx t) const;
    Cplx V(Cplx x, Cplx t) const;
    Cplx C(Cplx x, Cplx t) const;

    // cleared polynomial whose roots are the lam0 branches at fixed t
    core::Polynomial lambda_poly(Cplx t) const;
    std::vector<Cplx> lambda_branches(Cplx t) const;

    // reduced potential: double zero at lam0 when F(lam0, t) = 0
    Cplx Q0(Cplx x, Cplx t, Cplx lam0) const;

    // Q0 = R(x) C(x)^2 (x - lam0)^2 with R polynomial; fitted numerically,
    // residual must pass 1e-8 relative. R(lam0) = F1(lam0, t).
    int r_degree() const;
    core::Polynomial r_polynomial(Cplx t, Cplx lam0) const;
    // simple zeros of Q0 away from lam0
    std::vector<Cplx> branch_zeros(Cplx t, Cplx lam0) const;

    // finite poles of Q0 in x plus the point at infinity where relevant
    std::vector<PoleInfo> poles(Cplx t) const;

    // finite t where the t-plane geometry has a one-ray singular point
    std::vector<Cplx> t_singularities() const;

    // t-values where two lam0 branches collide (branch points of the t geometry)
    std::vector<Cplx> t_branch_points() const;

  private:
    Eq tag_;
    std::map<std::string, Cplx> params_;
    Cplx c_{0.0}, c0_{0.0}, c1_{0.0}, ct_{0.0}, ci_{0.0};
};

// Rational-function form of Q0 in x at fixed (t, lam0), for the ring layer.
core::RationalFunction q0_rational(const Equation& eq, Cplx t, Cplx lam0);

// Parametrization of the t-plane geometry by the lam0 coordinate u, available
// for P_II and P_III(D7). quad du^2 = F1 dt^2 pulled back.
struct UPlaneMap {
    std::function<Cplx(Cplx)> quad;     // quadratic differential in u
    std::function<Cplx(Cplx)> t_of_u;
    std::function<Cplx(Cplx)> lam0_of_u;
    std::function<Cplx(Cplx)> dt_du;
    std::vector<std::pair<Cplx, int>> zeros;  // (location, order)
    std::vector<std::pair<Cplx, int>> poles;  // (location, order)
};
UPlaneMap uplane_map(const Equation& eq);  // throws for unsupported tags

}  // namespace stokes::painleve
