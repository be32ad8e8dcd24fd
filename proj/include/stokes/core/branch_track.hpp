#pragma once
#include <functional>
#include <vector>

#include "stokes/core/integrate.hpp"
#include "stokes/core/path.hpp"

namespace stokes::core {

// Incremental nearest-value continuation of sqrt(q) along a marched curve.
// The caller is responsible for step sizes small enough that the true value
// rotates by less than ~90 degrees per step.
class SqrtTracker {
  public:
    void seed(Cplx w) {
        prev_ = w;
        have_ = true;
    }
    bool seeded() const { return have_; }
    Cplx current() const { return prev_; }
    Cplx step(Cplx qval);

  private:
    Cplx prev_{0.0};
    bool have_ = false;
};

// Branch-continued sqrt(q(z)) along a fixed path.
//
// Construction samples the path adaptively and stores a spine of reference
// values; evaluation snaps the principal sqrt at any (s, z) to the spine.
// Simple zeros of q are tolerated at path endpoints only; a zero or odd-order
// branch crossing in the interior raises BranchPointAt.
class TrackedSqrt {
  public:
    TrackedSqrt(std::function<Cplx(Cplx)> q, const ComplexPath& path,
                Cplx seed = Cplx(0.0, 0.0));  // seed 0 means principal sqrt

    Cplx operator()(double s, Cplx z) const;
    PathIntegrand integrand() const;  // ready-to-integrate sqrt along the path

    Cplx start_value() const { return w_.front(); }
    Cplx end_value() const { return w_.back(); }
    // For closed paths: +1 if the branch returns to itself, -1 if it flips.
    int closure_sign() const;

    const ComplexPath& path() const { return path_; }
    double value_scale() const { return wscale_; }

  private:
    void build(Cplx seed);
    std::function<Cplx(Cplx)> q_;
    ComplexPath path_;
    std::vector<double> s_;
    std::vector<Cplx> w_;
    double wscale_ = 0.0;
};

}  // namespace stokes::core
