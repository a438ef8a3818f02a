#include "su3coh/geomverify.hpp"

#include "su3coh/reps.hpp"
#include "su3coh/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace su3coh {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}

GroupMatrix consim_act(const GroupMatrix& a, const GroupMatrix& b) {
    return GroupMatrix(a.m * b.m * a.m.transpose());
}

GroupMatrix gamma(const GroupMatrix& a) {
    return GroupMatrix(a.m * a.m.conjugate());
}

AlgebraElement normal_direction_w() { return su2_v3(); }

GroupMatrix geodesic_point(double t) { return expm(t * normal_direction_w()); }

int consim_stabilizer_dim(const GroupMatrix& b, const Tolerances& tol) {
    // d/dt exp(tX) B exp(tX)^t at t = 0 is X B + B X^t; the stabilizer
    // algebra is its kernel.
    return stabilizer_dim_linear(
        [&b](const AlgebraElement& x) {
            return real_flatten(x.m * b.m + b.m * x.m.transpose());
        },
        tol);
}

namespace {

std::array<AlgebraElement, 3> orthonormalize(std::array<AlgebraElement, 3> v) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) v[i] = v[i] - inner(v[j], v[i]) * v[j];
        v[i] = v[i] * (1.0 / std::sqrt(inner(v[i], v[i])));
    }
    return v;
}

AlgebraElement project_out(const AlgebraElement& x,
                           const std::array<AlgebraElement, 3>& onb) {
    AlgebraElement out = x;
    for (const auto& q : onb) out = out - inner(q, x) * q;
    return out;
}

} // namespace

int flow_line_stabilizer(double t, const Tolerances& tol) {
    const auto onb = orthonormalize(
        {std::cos(t) * cartan_u() + std::sin(t) * cartan_v(), su2_v2(), su2_v3()});
    return stabilizer_dim_linear(
        [&onb](const AlgebraElement& x) {
            Eigen::VectorXd out(3 * 18);
            for (int i = 0; i < 3; ++i)
                out.segment(18 * i, 18) =
                    real_flatten(project_out(bracket(x, onb[i]), onb).m);
            return out;
        },
        tol);
}

OrientedThreePlane OrientedThreePlane::checked(
    const std::array<AlgebraElement, 3>& frame, const Tolerances& tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner(frame[i], frame[j]) - expected) > tol.mat)
                throw FrameNotOrthonormal("frame Gram matrix deviates from identity");
        }
    return OrientedThreePlane{frame};
}

double grassmann_f(const std::array<AlgebraElement, 3>& frame, const Tolerances& tol) {
    return grassmann_f(OrientedThreePlane::checked(frame, tol));
}

double grassmann_f(const OrientedThreePlane& plane) {
    return inner(plane.frame[0], bracket(plane.frame[1], plane.frame[2]));
}

TorusScan hypersurface_torus_solutions(int grid, const Tolerances& tol) {
    if (grid < 100) throw InvalidArgument("hypersurface scan requires grid >= 100");
    tol.validate();
    const double step = 2.0 * kPi / grid;
    const double eps = tol.mat * grid;
    TorusScan scan;
    scan.grid = grid;
    for (int i = 0; i < grid; ++i) {
        const double t = i * step;
        for (int j = 0; j < grid; ++j) {
            const double s = j * step;
            const double f = std::sin(t + s) + std::sin(s - t) - std::sin(2 * s);
            if (std::abs(f) < eps) scan.cells.push_back({i, j});
        }
    }
    return scan;
}

TorusScanCheck check_torus_scan(const TorusScan& scan) {
    const int n = scan.grid;
    TorusScanCheck out;
    std::vector<uint8_t> marked(static_cast<size_t>(n) * n, 0);
    for (auto [i, j] : scan.cells) marked[static_cast<size_t>(i) * n + j] = 1;

    auto circ = [n](long long d) {
        d = ((d % n) + n) % n;
        return static_cast<double>(std::min(d, static_cast<long long>(n) - d));
    };
    for (auto [i, j] : scan.cells) {
        // distance in cells to {s = k pi}, {s = t}, {s = -t}
        double d1 = 1e300;
        for (long long k = 0; k <= 2; ++k) d1 = std::min(d1, std::abs(j - k * (n / 2.0)));
        const double d = std::min({d1, circ(j - i), circ(static_cast<long long>(j) + i)});
        out.max_cell_distance = std::max(out.max_cell_distance, d);
    }

    out.lines_covered = true;
    for (int i = 0; i < n; ++i) {
        bool ok = marked[static_cast<size_t>(i) * n + 0] &&
                  marked[static_cast<size_t>(i) * n + i] &&
                  marked[static_cast<size_t>(i) * n + ((n - i) % n)];
        if (n % 2 == 0) ok = ok && marked[static_cast<size_t>(i) * n + n / 2];
        if (!ok) {
            out.lines_covered = false;
            break;
        }
    }
    return out;
}

namespace {

double norm_of(const Mat3& m) { return m.norm(); }

// Orthonormal basis of the orthogonal complement of the frame in su(3).
std::vector<AlgebraElement> complement_basis(const std::array<AlgebraElement, 3>& frame) {
    std::vector<AlgebraElement> comp;
    for (const auto& b : su3_basis()) {
        AlgebraElement x = b;
        for (const auto& q : frame) x = x - inner(q, x) * q;
        for (const auto& q : comp) x = x - inner(q, x) * q;
        const double n2 = inner(x, x);
        if (n2 > 1e-8) comp.push_back(x * (1.0 / std::sqrt(n2)));
        if (comp.size() == 5) break;
    }
    return comp;
}

} // namespace

double ascend_grassmann_f(std::array<AlgebraElement, 3> frame, int max_steps) {
    if (grassmann_f(OrientedThreePlane{frame}) < 0) std::swap(frame[1], frame[2]);
    double value = grassmann_f(OrientedThreePlane{frame});
    double step = 0.2;
    for (int iter = 0; iter < max_steps && step > 1e-14; ++iter) {
        const auto comp = complement_basis(frame);
        // gradient of f under moving frame vector i toward complement k
        std::array<AlgebraElement, 3> direction = {AlgebraElement{}, AlgebraElement{},
                                                   AlgebraElement{}};
        double gnorm2 = 0.0;
        for (int i = 0; i < 3; ++i)
            for (const auto& n : comp) {
                auto probe = frame;
                probe[i] = n;
                const double g = grassmann_f(OrientedThreePlane{probe});
                direction[i] = direction[i] + g * n;
                gnorm2 += g * g;
            }
        if (gnorm2 < 1e-24) break;
        bool improved = false;
        while (step > 1e-14) {
            std::array<AlgebraElement, 3> trial;
            for (int i = 0; i < 3; ++i) trial[i] = frame[i] + step * direction[i];
            trial = orthonormalize(trial);
            const double tv = grassmann_f(OrientedThreePlane{trial});
            if (tv > value) {
                frame = trial;
                value = tv;
                improved = true;
                break;
            }
            step /= 2;
        }
        if (!improved) break;
    }
    return value;
}

namespace {

struct CheckAccumulator {
    std::vector<VerificationReport>& out;

    void add(const std::string& name, long long samples, double deviation,
             double tolerance) {
        out.push_back({name, samples, deviation, tolerance, deviation < tolerance});
    }

    // rank-based checks report RankUnstable as a failure instead of throwing
    void add_guarded(const std::string& name, long long samples, double tolerance,
                     const std::function<double()>& deviation) {
        double dev;
        try {
            dev = deviation();
        } catch (const RankUnstable&) {
            dev = 1e300;
        }
        add(name, samples, dev, tolerance);
    }
};

void run_consim_checks(Sampler& rng, long long samples, const Tolerances& tol,
                       int hypersurface_grid, std::vector<VerificationReport>& out) {
    CheckAccumulator acc{out};

    // group action law and identity action
    double dev = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const GroupMatrix a1 = rng.group(), a2 = rng.group(), b = rng.group();
        dev = std::max(dev, norm_of(consim_act(GroupMatrix(a1.m * a2.m), b).m -
                                    consim_act(a1, consim_act(a2, b)).m));
        dev = std::max(dev, norm_of(consim_act(GroupMatrix(Mat3::Identity()), b).m - b.m));
    }
    acc.add("consim-action-law", samples, dev, tol.mat);

    // trace of A conj(A) is real
    dev = 0.0;
    for (long long i = 0; i < samples; ++i)
        dev = std::max(dev, std::abs(gamma(rng.group()).m.trace().imag()));
    acc.add("gamma-trace-real", samples, dev, 1e-12);

    // gamma(A B A^t) = A gamma(B) A^{-1}
    dev = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const GroupMatrix a = rng.group(), b = rng.group();
        dev = std::max(dev, norm_of(gamma(consim_act(a, b)).m -
                                    a.m * gamma(b).m * a.m.adjoint()));
    }
    acc.add("gamma-equivariance", samples, dev, 1e-10);

    // gamma along the normal geodesic doubles the parameter
    dev = 0.0;
    {
        std::vector<double> ts = {0.1, 0.5, kPi / 4};
        for (int k = 0; k <= 8; ++k) ts.push_back(k * kPi / 16);
        for (double t : ts)
            dev = std::max(dev, norm_of(gamma(geodesic_point(t)).m - geodesic_point(2 * t).m));
    }
    acc.add("gamma-geodesic-doubling", 12, dev, 1e-10);

    // stabilizer dimensions along the geodesic: singular orbits at the ends
    acc.add_guarded("consim-stabilizer-profile", 9, 0.5, [&tol] {
        const std::array<int, 9> expected = {3, 1, 1, 1, 1, 1, 1, 1, 3};
        int mismatches = 0;
        for (int k = 0; k <= 8; ++k)
            if (consim_stabilizer_dim(geodesic_point(k * kPi / 16), tol) != expected[k])
                ++mismatches;
        return double(mismatches);
    });

    // stabilizer dimension is an orbit invariant
    const long long orbit_samples = std::min<long long>(samples, 500);
    acc.add_guarded("consim-orbit-invariance", orbit_samples, 0.5, [&] {
        int mismatches = 0;
        for (long long i = 0; i < orbit_samples; ++i) {
            const GroupMatrix b = i % 3 == 0 ? geodesic_point(rng.uniform(0.05, 1.5))
                                             : rng.group();
            const GroupMatrix a = rng.group();
            if (consim_stabilizer_dim(b, tol) != consim_stabilizer_dim(consim_act(a, b), tol))
                ++mismatches;
        }
        return double(mismatches);
    });

    // the fibre of gamma through a generic geodesic point is the circle
    // generated by the central direction v
    dev = 0.0;
    {
        const GroupMatrix base = geodesic_point(0.3);
        const GroupMatrix target = gamma(base);
        for (long long i = 0; i < std::min<long long>(samples, 200); ++i) {
            const GroupMatrix c =
                GroupMatrix(base.m * expm(rng.uniform(0.0, 2 * kPi) * cartan_v()).m);
            dev = std::max(dev, norm_of(gamma(c).m - target.m));
        }
        acc.add("gamma-fibre-circle", std::min<long long>(samples, 200), dev, tol.mat);
    }

    // A A^t = C C^t forces C^{-1} A in SO(3)
    dev = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const GroupMatrix a = rng.group();
        const GroupMatrix r(rng.so3().cast<Cplx>());
        const Mat3 c = a.m * r.m;
        dev = std::max(dev, norm_of(a.m * a.m.transpose() - c * c.transpose()));
        const Mat3 d = c.inverse() * a.m;
        dev = std::max(dev, d.imag().norm());
        dev = std::max(dev, norm_of(d * d.transpose() - Mat3::Identity()));
    }
    acc.add("symmetric-orbit-injectivity", samples, dev, tol.mat);

    // expm lands in the group
    dev = 0.0;
    for (long long i = 0; i < samples; ++i) {
        AlgebraElement x = rng.algebra(3.0);
        const double mx = x.m.cwiseAbs().maxCoeff();
        if (mx > 10.0) x = x * (10.0 / mx);
        const GroupMatrix g = expm(x);
        dev = std::max(dev, norm_of(g.m.adjoint() * g.m - Mat3::Identity()));
        dev = std::max(dev, std::abs(g.m.determinant() - Cplx(1.0)));
    }
    acc.add("expm-group-invariants", samples, dev, tol.mat);

    // Im tr exp(tu + sv) vanishes exactly on three lines of the torus
    {
        const TorusScan scan = hypersurface_torus_solutions(hypersurface_grid, tol);
        const TorusScanCheck chk = check_torus_scan(scan);
        const double deviation = chk.max_cell_distance + (chk.lines_covered ? 0.0 : 1000.0);
        acc.add("hypersurface-lines", static_cast<long long>(scan.cells.size()),
                deviation, 1.0 + 1e-9);
    }
}

void run_grassmann_checks(Sampler& rng, long long samples, const Tolerances& tol,
                          std::vector<VerificationReport>& out) {
    CheckAccumulator acc{out};

    // invariance under the adjoint action and oriented frame rotation
    double dev = 0.0;
    for (long long i = 0; i < samples; ++i) {
        const auto frame = rng.frame();
        const double f = grassmann_f(OrientedThreePlane{frame});
        const GroupMatrix g = rng.group();
        std::array<AlgebraElement, 3> moved;
        for (int k = 0; k < 3; ++k) moved[k] = adjoint(g, frame[k]);
        dev = std::max(dev, std::abs(grassmann_f(OrientedThreePlane{moved}) - f));
        const Eigen::Matrix3d r = rng.so3();
        std::array<AlgebraElement, 3> rotated;
        for (int k = 0; k < 3; ++k)
            rotated[k] = r(0, k) * frame[0] + r(1, k) * frame[1] + r(2, k) * frame[2];
        dev = std::max(dev, std::abs(grassmann_f(OrientedThreePlane{rotated}) - f));
    }
    acc.add("grassmann-invariance", samples, dev, 1e-9);

    // sampled extremes against the critical value sqrt(2)
    constexpr long long kFrames = 100000;
    double best = 0.0;
    std::array<AlgebraElement, 3> best_frame = rng.frame();
    for (long long i = 0; i < kFrames; ++i) {
        const auto frame = rng.frame();
        const double af = std::abs(grassmann_f(OrientedThreePlane{frame}));
        if (af > best) {
            best = af;
            best_frame = frame;
        }
    }
    acc.add("grassmann-max-bound", kFrames, std::max(0.0, best - kSqrt2), 1e-6);
    // Uniform sampling concentrates away from the 4-dimensional critical set
    // inside the 15-dimensional Grassmannian, so the sampled maximum sits a
    // gap ~0.1 below sqrt(2); this check records that gap against the 0.05
    // target and is expected to fail for almost every seed.
    acc.add("grassmann-max-approach", kFrames, kSqrt2 - best, 0.05);
    // local ascent from the best sample certifies the critical value itself
    const double ascended = ascend_grassmann_f(best_frame);
    acc.add("grassmann-ascent-attainment", kFrames, std::abs(kSqrt2 - ascended), 1e-6);

    // stabilizers along the gradient flow line
    acc.add_guarded("flow-line-stabilizers", 9, 0.5, [&tol] {
        int mismatches = 0;
        for (double t : {kPi / 3, 1e-3, kPi - 1e-3, 1.2, kPi / 2, 2.5})
            if (flow_line_stabilizer(t, tol) != 2) ++mismatches;
        for (double t : {0.0, kPi, 2 * kPi})
            if (flow_line_stabilizer(t, tol) != 4) ++mismatches;
        return double(mismatches);
    });
}

} // namespace

std::vector<VerificationReport> verify_suite(unsigned long long seed, long long samples,
                                             const Tolerances& tol, VerifyGroup group,
                                             int hypersurface_grid) {
    if (samples < 1) throw InvalidArgument("samples must be >= 1");
    tol.validate();
    Sampler rng(seed);
    std::vector<VerificationReport> out;
    if (group == VerifyGroup::Consim || group == VerifyGroup::All)
        run_consim_checks(rng, samples, tol, hypersurface_grid, out);
    if (group == VerifyGroup::Grassmann || group == VerifyGroup::All)
        run_grassmann_checks(rng, samples, tol, out);
    return out;
}

std::vector<VerificationReport> verify_torus_lemma(long long bound) {
    if (bound < 1) throw InvalidArgument("bound must be >= 1");
    long long pairs = 0;
    int mismatches = 0;
    for (long long p = -bound; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            if (p < 0 || (p == 0 && q < 0)) continue;  // counts are sign-symmetric
            ++pairs;
            if (torus_weight_component_count(p, q) != std::gcd(p, q)) ++mismatches;
        }
    return {{"torus-gcd-components", pairs, static_cast<double>(mismatches), 0.5,
             mismatches == 0}};
}

} // namespace su3coh
