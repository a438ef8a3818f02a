#pragma once

#include "su3coh/liealg.hpp"

#include <array>
#include <random>

namespace su3coh {

/// Deterministic sampler for algebra elements, group elements and
/// orthonormal 3-frames.
struct Sampler {
    std::mt19937_64 eng;
    std::normal_distribution<double> gauss;

    explicit Sampler(unsigned long long seed) : eng(seed) {}

    double normal() { return gauss(eng); }
    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(eng);
    }

    /// Normally distributed coefficients in the su(3) basis.
    AlgebraElement algebra(double scale = 1.0);

    /// expm of a random algebra element.
    GroupMatrix group(double scale = 1.0);

    /// Gram-Schmidt on three random algebra elements; near-degenerate
    /// triples (Gram determinant < 1e-6) are rejected.
    std::array<AlgebraElement, 3> frame();

    /// Random rotation matrix (QR sign-fixed, determinant +1).
    Eigen::Matrix3d so3();
};

} // namespace su3coh
