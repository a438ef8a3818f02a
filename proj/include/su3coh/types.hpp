#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace su3coh {

using Cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct ZeroPair : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotOdd : Error { using Error::Error; };
struct NotRootType : Error { using Error::Error; };
struct IncompatibleRegime : Error { using Error::Error; };
struct RankUnstable : Error { using Error::Error; };
struct FrameNotOrthonormal : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

/// Numeric thresholds: `mat` bounds deviations from matrix identities,
/// `rank` is the singular-value cutoff for rank decisions.
struct Tolerances {
    double mat = 1e-9;
    double rank = 1e-7;

    void validate() const {
        if (!(mat > 0.0 && mat < 1.0) || !(rank > 0.0 && rank < 1.0))
            throw InvalidArgument("tolerances must lie in (0, 1)");
    }
};

} // namespace su3coh
