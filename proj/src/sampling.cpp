#include "su3coh/sampling.hpp"

namespace su3coh {

AlgebraElement Sampler::algebra(double scale) {
    Mat3 m = Mat3::Zero();
    for (const auto& b : su3_basis()) m += scale * normal() * b.m;
    return AlgebraElement(m);
}

GroupMatrix Sampler::group(double scale) { return expm(algebra(scale)); }

std::array<AlgebraElement, 3> Sampler::frame() {
    while (true) {
        std::array<AlgebraElement, 3> raw = {algebra(), algebra(), algebra()};
        Eigen::Matrix3d gram;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) gram(i, j) = inner(raw[i], raw[j]);
        if (gram.determinant() < 1e-6) continue;
        std::array<AlgebraElement, 3> out = raw;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < i; ++j) out[i] = out[i] - inner(out[j], out[i]) * out[j];
            out[i] = out[i] * (1.0 / std::sqrt(inner(out[i], out[i])));
        }
        return out;
    }
}

Eigen::Matrix3d Sampler::so3() {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = normal();
    Eigen::HouseholderQR<Eigen::Matrix3d> qr(m);
    Eigen::Matrix3d q = qr.householderQ();
    Eigen::Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 3; ++i)
        if (r(i, i) < 0) q.col(i) = -q.col(i);
    if (q.determinant() < 0) q.col(2) = -q.col(2);
    return q;
}

} // namespace su3coh
