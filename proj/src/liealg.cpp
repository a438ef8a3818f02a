#include "su3coh/liealg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace su3coh {

bool is_algebra_element(const Mat3& m, const Tolerances& tol) {
    return (m + m.adjoint()).norm() <= tol.mat && std::abs(m.trace()) <= tol.mat;
}

bool is_group_matrix(const Mat3& m, const Tolerances& tol) {
    return (m.adjoint() * m - Mat3::Identity()).norm() <= tol.mat &&
           std::abs(m.determinant() - Cplx(1.0)) <= tol.mat;
}

AlgebraElement AlgebraElement::checked(const Mat3& mat, const Tolerances& tol) {
    if (!is_algebra_element(mat, tol))
        throw InvalidArgument("matrix is not anti-Hermitian traceless within tolerance");
    return AlgebraElement(mat);
}

GroupMatrix GroupMatrix::checked(const Mat3& mat, const Tolerances& tol) {
    if (!is_group_matrix(mat, tol))
        throw InvalidArgument("matrix is not special unitary within tolerance");
    return GroupMatrix(mat);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    return AlgebraElement(x.m * y.m - y.m * x.m);
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
    return -(x.m * y.m).trace().real();
}

GroupMatrix expm(const AlgebraElement& x) {
    // X = -iH with H Hermitian, so exp(X) = V diag(exp(-i lambda)) V^H.
    Eigen::SelfAdjointEigenSolver<Mat3> es(Cplx(0, 1) * x.m);
    Mat3 phases = Mat3::Zero();
    for (int i = 0; i < 3; ++i)
        phases(i, i) = std::exp(Cplx(0, -es.eigenvalues()[i]));
    return GroupMatrix(es.eigenvectors() * phases * es.eigenvectors().adjoint());
}

AlgebraElement adjoint(const GroupMatrix& g, const AlgebraElement& x) {
    return AlgebraElement(g.m * x.m * g.m.adjoint());
}

namespace {

Mat3 unit(int j, int k) {
    Mat3 m = Mat3::Zero();
    m(j, k) = 1.0;
    return m;
}

std::array<AlgebraElement, 8> make_basis() {
    std::array<AlgebraElement, 8> b;
    b[0] = cartan_u();
    b[1] = cartan_u_prime();
    int idx = 2;
    for (auto [j, k] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        b[idx++] = AlgebraElement(unit(j, k) - unit(k, j));
        b[idx++] = AlgebraElement(Cplx(0, 1) * (unit(j, k) + unit(k, j)));
    }
    return b;
}

} // namespace

const std::array<AlgebraElement, 8>& su3_basis() {
    static const std::array<AlgebraElement, 8> basis = make_basis();
    return basis;
}

AlgebraElement cartan_u() {
    Mat3 m = Mat3::Zero();
    m(0, 0) = Cplx(0, 1);
    m(1, 1) = Cplx(0, -1);
    return AlgebraElement(m);
}

AlgebraElement cartan_u_prime() {
    Mat3 m = Mat3::Zero();
    m(1, 1) = Cplx(0, 1);
    m(2, 2) = Cplx(0, -1);
    return AlgebraElement(m);
}

AlgebraElement cartan_v() {
    return cartan_u() + 2.0 * cartan_u_prime();
}

AlgebraElement su2_v1() { return cartan_u(); }

AlgebraElement su2_v2() {
    Mat3 m = Mat3::Zero();
    m(0, 1) = Cplx(0, 1);
    m(1, 0) = Cplx(0, 1);
    return AlgebraElement(m);
}

AlgebraElement su2_v3() {
    Mat3 m = Mat3::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    return AlgebraElement(m);
}

Eigen::VectorXd real_flatten(const Mat3& m) {
    Eigen::VectorXd v(18);
    int idx = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            v[idx++] = m(i, j).real();
            v[idx++] = m(i, j).imag();
        }
    return v;
}

int matrix_rank(const Eigen::MatrixXd& a, const Tolerances& tol) {
    tol.validate();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] >= tol.rank / 10.0 && sv[i] <= tol.rank * 10.0)
            throw RankUnstable("singular value " + std::to_string(sv[i]) +
                               " within a factor 10 of the rank threshold");
        if (sv[i] > tol.rank) ++rank;
    }
    return rank;
}

int stabilizer_dim_linear(
    const std::function<Eigen::VectorXd(const AlgebraElement&)>& constraint,
    const Tolerances& tol) {
    const auto& basis = su3_basis();
    Eigen::VectorXd first = constraint(basis[0]);
    Eigen::MatrixXd a(first.size(), 8);
    a.col(0) = first;
    for (int i = 1; i < 8; ++i) a.col(i) = constraint(basis[i]);
    return 8 - matrix_rank(a, tol);
}

} // namespace su3coh
