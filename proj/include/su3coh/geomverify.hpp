#pragma once

#include "su3coh/liealg.hpp"

#include <array>
#include <string>
#include <vector>

namespace su3coh {

// Numerical verification layer: the twisted conjugation action
// A . B = A B A^t of SU(3) on itself, the squaring map A -> A conj(A) onto
// the real-trace hypersurface, and the 3-form function on oriented
// 3-planes of su(3).

/// A B A^t; for special unitary A this equals A B conj(A)^{-1}.
GroupMatrix consim_act(const GroupMatrix& a, const GroupMatrix& b);

/// A conj(A); intertwines the twisted action with ordinary conjugation and
/// lands in {trace real}.
GroupMatrix gamma(const GroupMatrix& a);

/// Normal direction of the geodesic through the identity: the real rotation
/// generator w in the upper-left block (= su2_v3()).
AlgebraElement normal_direction_w();

/// exp(t w).
GroupMatrix geodesic_point(double t);

/// Dimension of {X in su(3) : X B + B X^t = 0}, the kernel of the derivative
/// of A -> A B A^t at the identity.
int consim_stabilizer_dim(const GroupMatrix& b, const Tolerances& tol = {});

/// Dimension of {X : [X, V(t)] inside V(t)} for the plane
/// V(t) = span{u cos t + v sin t, v2, v3}.
int flow_line_stabilizer(double t, const Tolerances& tol = {});

/// Oriented orthonormal 3-frame in su(3) (Gram matrix = identity under -tr).
struct OrientedThreePlane {
    std::array<AlgebraElement, 3> frame;

    static OrientedThreePlane checked(const std::array<AlgebraElement, 3>& frame,
                                      const Tolerances& tol = {});
};

/// <x, [y,z]> on an orthonormal frame; throws FrameNotOrthonormal.
double grassmann_f(const std::array<AlgebraElement, 3>& frame,
                   const Tolerances& tol = {});
double grassmann_f(const OrientedThreePlane& plane);

/// Grid scan of Im tr exp(t u + s v) over [0,2pi)^2; returns the grid points
/// where it vanishes (threshold tol.mat * grid).
struct TorusScan {
    int grid = 0;
    std::vector<std::pair<int, int>> cells;
};

TorusScan hypersurface_torus_solutions(int grid, const Tolerances& tol = {});

/// Largest distance (in cells) from a marked cell to the solution lines
/// {s = 0 mod pi} u {s = t} u {s = -t}, plus a coverage flag: every grid
/// point on those lines is marked.
struct TorusScanCheck {
    double max_cell_distance = 0.0;
    bool lines_covered = false;
};

TorusScanCheck check_torus_scan(const TorusScan& scan);

struct VerificationReport {
    std::string check_name;
    long long samples = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

enum class VerifyGroup { Consim, Grassmann, All };

/// Seeded verification suite; one report per named check. Failures are
/// reported, not thrown.
std::vector<VerificationReport> verify_suite(unsigned long long seed, long long samples,
                                             const Tolerances& tol = {},
                                             VerifyGroup group = VerifyGroup::All,
                                             int hypersurface_grid = 720);

/// gcd component-count oracle reports for all |p|,|q| <= bound.
std::vector<VerificationReport> verify_torus_lemma(long long bound);

/// Deterministic local ascent of |f| on the Grassmannian starting from the
/// given frame; returns the reached value.
double ascend_grassmann_f(std::array<AlgebraElement, 3> frame, int max_steps = 400);

} // namespace su3coh
