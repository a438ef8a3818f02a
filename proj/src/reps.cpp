#include "su3coh/reps.hpp"

#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <random>

namespace su3coh {

SliceRep SliceRep::so3_standard() {
    SliceRep s;
    s.kind = Kind::SO3Standard;
    return s;
}

SliceRep SliceRep::u2(long long m) {
    if (m % 2 == 0) throw NotOdd("U(2) slice parameter m must be odd");
    SliceRep s;
    s.kind = Kind::U2;
    s.m = std::abs(m);  // the family satisfies P(m) = P(-m)
    return s;
}

SliceRep SliceRep::torus(long long p, long long q) {
    if (p == 0 && q == 0) throw ZeroPair("torus weight (0,0) is not sphere-transitive");
    SliceRep s;
    s.kind = Kind::Torus;
    // (p,q) and (-p,-q) define the same real representation.
    if (p < 0 || (p == 0 && q < 0)) { p = -p; q = -q; }
    s.p = p;
    s.q = q;
    return s;
}

int SliceRep::real_dim() const {
    switch (kind) {
        case Kind::SU2Standard:
        case Kind::SO3Standard: return 3;
        case Kind::U2: return 4;
        case Kind::Torus: return 2;
    }
    return 0;
}

std::vector<SliceRep> enumerate_slice_reps(StabilizerTag tag, long long bound) {
    if (bound < 1) throw InvalidArgument("enumeration bound must be >= 1");
    std::vector<SliceRep> out;
    switch (tag) {
        case StabilizerTag::SU2:
            out.push_back(SliceRep::su2_standard());
            break;
        case StabilizerTag::SO3:
            out.push_back(SliceRep::so3_standard());
            break;
        case StabilizerTag::U2:
            for (long long m = 1; m <= bound; m += 2) out.push_back(SliceRep::u2(m));
            break;
        case StabilizerTag::T2:
            // one representative per sign class: p > 0, or p = 0 with q > 0
            for (long long q = 1; q <= bound; ++q) out.push_back(SliceRep::torus(0, q));
            for (long long p = 1; p <= bound; ++p)
                for (long long q = -bound; q <= bound; ++q)
                    out.push_back(SliceRep::torus(p, q));
            break;
    }
    return out;
}

PrincipalStabilizer principal_stabilizer(const SliceRep& slice) {
    switch (slice.kind) {
        case SliceRep::Kind::SU2Standard:
        case SliceRep::Kind::SO3Standard:
            return {canonicalize(1, -1), 1};
        case SliceRep::Kind::U2:
            return {perp_line_in_cartan(u2_weight(slice.m)), 1};
        case SliceRep::Kind::Torus:
            return {perp_line_in_cartan(weight_vector(slice.p, slice.q)),
                    std::gcd(std::abs(slice.p), std::abs(slice.q))};
    }
    throw InvalidArgument("invalid slice representation");
}

WeightVector restrict_u2_to_torus(long long m) {
    if (m % 2 == 0) throw NotOdd("restriction is defined for odd m only");
    return {(m - 1) / 2, 1};
}

namespace {

Eigen::MatrixXd zeros(int n) { return Eigen::MatrixXd::Zero(n, n); }

// so(3) rotation generators on R^3.
std::vector<Eigen::MatrixXd> so3_generators() {
    Eigen::MatrixXd lx = zeros(3), ly = zeros(3), lz = zeros(3);
    lx(1, 2) = -1; lx(2, 1) = 1;
    ly(0, 2) = 1;  ly(2, 0) = -1;
    lz(0, 1) = -1; lz(1, 0) = 1;
    return {lx, ly, lz};
}

// su(2) acting on its own 3-dimensional real form by the bracket, expressed
// in the basis (v1, v2, v3): ad(v1) = (v2 -> -2 v3, v3 -> 2 v2), cyclically.
std::vector<Eigen::MatrixXd> su2_adjoint_generators() {
    Eigen::MatrixXd a1 = zeros(3), a2 = zeros(3), a3 = zeros(3);
    a1(2, 1) = -2; a1(1, 2) = 2;
    a2(0, 2) = -2; a2(2, 0) = 2;
    a3(1, 0) = -2; a3(0, 1) = 2;
    return {a1, a2, a3};
}

// The 4-dimensional family in the real basis w1..w4: su(2) generators act by
//   v1: w1->w3, w2->w4, w3->-w1, w4->-w2
//   v2: w1->w4, w2->-w3, w3->w2, w4->-w1
//   v3: w1->w2, w2->-w1, w3->-w4, w4->w3
// and the central direction acts like v1 with weight m on (w1,w3) and -m on
// (w2,w4).
std::vector<Eigen::MatrixXd> u2_generators(long long m) {
    Eigen::MatrixXd r1 = zeros(4), r2 = zeros(4), r3 = zeros(4), rc = zeros(4);
    r1(2, 0) = 1; r1(3, 1) = 1; r1(0, 2) = -1; r1(1, 3) = -1;
    r2(3, 0) = 1; r2(2, 1) = -1; r2(1, 2) = 1; r2(0, 3) = -1;
    r3(1, 0) = 1; r3(0, 1) = -1; r3(3, 2) = -1; r3(2, 3) = 1;
    rc(2, 0) = m; rc(3, 1) = -m; rc(0, 2) = -m; rc(1, 3) = m;
    return {r1, r2, r3, rc};
}

std::vector<Eigen::MatrixXd> torus_generators(long long p, long long q) {
    Eigen::MatrixXd j = zeros(2);
    j(0, 1) = -1;
    j(1, 0) = 1;
    return {double(p) * j, double(q) * j};
}

} // namespace

std::vector<Eigen::MatrixXd> real_generators(const SliceRep& slice) {
    switch (slice.kind) {
        case SliceRep::Kind::SU2Standard: return su2_adjoint_generators();
        case SliceRep::Kind::SO3Standard: return so3_generators();
        case SliceRep::Kind::U2: return u2_generators(slice.m);
        case SliceRep::Kind::Torus: return torus_generators(slice.p, slice.q);
    }
    throw InvalidArgument("invalid slice representation");
}

bool sphere_transitive_generators(const std::vector<Eigen::MatrixXd>& generators,
                                  int dim, const Tolerances& tol,
                                  int num_vectors, unsigned long long seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < num_vectors; ++trial) {
        Eigen::VectorXd x(dim);
        do {
            for (int i = 0; i < dim; ++i) x[i] = gauss(eng);
        } while (x.norm() < 1e-3);
        x.normalize();
        Eigen::MatrixXd orbit(dim, static_cast<int>(generators.size()));
        for (int g = 0; g < orbit.cols(); ++g) orbit.col(g) = generators[g] * x;
        if (matrix_rank(orbit, tol) != dim - 1) return false;
    }
    return true;
}

bool sphere_transitivity_check(const SliceRep& slice, const Tolerances& tol,
                               int num_vectors, unsigned long long seed) {
    return sphere_transitive_generators(real_generators(slice), slice.real_dim(),
                                        tol, num_vectors, seed);
}

int torus_weight_component_count(long long p, long long q, int grid_per_unit) {
    if (p == 0 && q == 0) throw ZeroPair("weight (0,0) has no solution curve");
    if (grid_per_unit < 100) throw InvalidArgument("grid resolution too coarse");
    const long long mx = std::max(std::abs(p), std::abs(q));
    if (mx > 64) throw InvalidArgument("weight exceeds the supported grid range");
    const long long n = grid_per_unit * mx;
    // Mark grid points within one cell of a solution line: the value
    // (p*i + q*j)/n mod 1 varies by at most (|p|+|q|)/n across a cell.
    // Along a row the residue steps by q, so the marked j form short runs;
    // only those are stored.
    const long long thick = std::abs(p) + std::abs(q);
    std::unordered_map<long long, int> index;
    std::vector<std::pair<long long, long long>> cells;
    // signed residue step per j; |s| <= thick, so a single step can never
    // jump across a marked run
    const long long s = q;
    for (long long i = 0; i < n; ++i) {
        long long r = ((p * i) % n + n) % n;
        for (long long j = 0; j < n; ++j) {
            if (r <= thick || n - r <= thick) {
                index.emplace(i * n + j, -1);
                cells.push_back({i, j});
                r = ((r + s) % n + n) % n;
            } else if (s == 0) {
                break;  // constant row, nothing marked
            } else {
                // stay outside the window for `skip` steps, never past it
                const long long skip =
                    std::max(1ll, s > 0 ? (n - thick - r) / s : (r - thick) / (-s));
                j += skip - 1;
                r = ((r + skip * s) % n + n) % n;
            }
        }
    }
    // Count 8-connected components with wraparound.
    int components = 0;
    std::vector<std::pair<long long, long long>> stack;
    for (const auto& seed : cells) {
        auto it = index.find(seed.first * n + seed.second);
        if (it->second != -1) continue;
        it->second = components;
        stack.push_back(seed);
        while (!stack.empty()) {
            auto [ci, cj] = stack.back();
            stack.pop_back();
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const long long ni = (ci + di + n) % n;
                    const long long nj = (cj + dj + n) % n;
                    auto nit = index.find(ni * n + nj);
                    if (nit != index.end() && nit->second == -1) {
                        nit->second = components;
                        stack.push_back({ni, nj});
                    }
                }
        }
        ++components;
    }
    return components;
}

} // namespace su3coh
