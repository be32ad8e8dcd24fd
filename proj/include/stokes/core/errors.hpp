#pragma once
#include <complex>
#include <stdexcept>
#include <string>

namespace stokes {

// Base for every error thrown by the library.
struct StokesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numeric core
struct NonConvergence : StokesError { using StokesError::StokesError; };
struct ToleranceNotMet : StokesError { using StokesError::StokesError; };
struct SingularOnPath : StokesError { using StokesError::StokesError; };
struct BranchPointAt : StokesError {
    std::complex<double> where;
    explicit BranchPointAt(std::complex<double> p, const std::string& msg)
        : StokesError(msg), where(p) {}
};
struct RingDivisionFailure : StokesError { using StokesError::StokesError; };

// catalog
struct PoleOfF : StokesError { using StokesError::StokesError; };
struct BranchPointCrossed : StokesError { using StokesError::StokesError; };
struct PoleOfQ : StokesError { using StokesError::StokesError; };
struct ZeroParameter : StokesError { using StokesError::StokesError; };

// geometry
struct StepCollapse : StokesError { using StokesError::StokesError; };

// periods
struct OddOrderPole : StokesError { using StokesError::StokesError; };

// saddle detector
struct CertificationFailed : StokesError { using StokesError::StokesError; };
struct NotTwoSegments : StokesError { using StokesError::StokesError; };

// wkb
struct GradeMismatch : StokesError { using StokesError::StokesError; };

// transform builder
struct NotPureImaginary : StokesError { using StokesError::StokesError; };
struct NewtonDivergence : StokesError { using StokesError::StokesError; };
struct KMismatch : StokesError { using StokesError::StokesError; };
struct BranchInconsistency : StokesError { using StokesError::StokesError; };
struct MonodromyFailure : StokesError {
    double defect;
    MonodromyFailure(double d, const std::string& msg) : StokesError(msg), defect(d) {}
};

}  // namespace stokes
