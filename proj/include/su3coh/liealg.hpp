#pragma once

#include "su3coh/types.hpp"

#include <array>
#include <functional>

namespace su3coh {

// Conventions used throughout:
//   * algebra elements are anti-Hermitian traceless 3x3 complex matrices,
//   * group elements are special unitary 3x3 complex matrices,
//   * the invariant inner product is <X,Y> = -Re tr(XY), so that
//     u = diag(i,-i,0) has <u,u> = 2.

struct AlgebraElement {
    Mat3 m = Mat3::Zero();

    AlgebraElement() = default;
    explicit AlgebraElement(Mat3 mat) : m(std::move(mat)) {}

    /// Validating factory; throws InvalidArgument unless anti-Hermitian and
    /// traceless within tol.mat.
    static AlgebraElement checked(const Mat3& mat, const Tolerances& tol = {});

    AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(m + o.m); }
    AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(m - o.m); }
    AlgebraElement operator*(double c) const { return AlgebraElement(c * m); }
    AlgebraElement operator-() const { return AlgebraElement(-m); }
};

inline AlgebraElement operator*(double c, const AlgebraElement& x) { return x * c; }

struct GroupMatrix {
    Mat3 m = Mat3::Identity();

    GroupMatrix() = default;
    explicit GroupMatrix(Mat3 mat) : m(std::move(mat)) {}

    /// Validating factory; throws InvalidArgument unless unitary with unit
    /// determinant within tol.mat.
    static GroupMatrix checked(const Mat3& mat, const Tolerances& tol = {});
};

bool is_algebra_element(const Mat3& m, const Tolerances& tol = {});
bool is_group_matrix(const Mat3& m, const Tolerances& tol = {});

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
double inner(const AlgebraElement& x, const AlgebraElement& y);

/// Matrix exponential of an anti-Hermitian matrix, computed from the
/// eigendecomposition of the Hermitian matrix iX.
GroupMatrix expm(const AlgebraElement& x);

/// Ad_g X = g X g^{-1}.
AlgebraElement adjoint(const GroupMatrix& g, const AlgebraElement& x);

/// Fixed basis of su(3): u = diag(i,-i,0), u' = diag(0,i,-i), then for each
/// pair j<k the real rotation E_jk - E_kj and the symmetric i(E_jk + E_kj).
const std::array<AlgebraElement, 8>& su3_basis();

AlgebraElement cartan_u();        // diag(i, -i, 0)
AlgebraElement cartan_u_prime();  // diag(0, i, -i)
AlgebraElement cartan_v();        // diag(i, i, -2i) = u + 2u'

// Basis of the su(2) block in the upper-left 2x2 corner.
AlgebraElement su2_v1();  // diag(i, -i) block
AlgebraElement su2_v2();  // antidiagonal (i, i) block
AlgebraElement su2_v3();  // real rotation block; also the normal direction w

/// Flatten a complex 3x3 matrix to an 18-dimensional real vector.
Eigen::VectorXd real_flatten(const Mat3& m);

/// Rank with singular-value cutoff tol.rank. Throws RankUnstable if any
/// singular value lies within a factor 10 of the cutoff.
int matrix_rank(const Eigen::MatrixXd& a, const Tolerances& tol);

/// Dimension of the kernel of a linear map from su(3), i.e. 8 - rank of the
/// matrix whose columns are the images of the basis elements.
int stabilizer_dim_linear(
    const std::function<Eigen::VectorXd(const AlgebraElement&)>& constraint,
    const Tolerances& tol = {});

} // namespace su3coh
