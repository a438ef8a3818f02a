#pragma once

#include "su3coh/cartan.hpp"

#include <string>
#include <vector>

namespace su3coh {

enum class StabilizerTag { SU2, SO3, U2, T2 };

/// Sphere-transitive slice representation of a connected singular stabilizer:
/// the standard 3-dimensional representation of SU(2) or SO(3), the
/// 4-dimensional U(2) family indexed by odd m (m ~ -m), or the 2-dimensional
/// torus representation of weight (p,q), (p,q) ~ (-p,-q).
struct SliceRep {
    enum class Kind { SU2Standard, SO3Standard, U2, Torus };

    Kind kind = Kind::SU2Standard;
    long long m = 0;  // U2 family parameter, stored positive odd
    long long p = 0, q = 0;  // torus weight, sign-normalized

    static SliceRep su2_standard() { return {}; }
    static SliceRep so3_standard();
    static SliceRep u2(long long m);          // throws NotOdd
    static SliceRep torus(long long p, long long q);  // throws ZeroPair

    int real_dim() const;
    bool operator==(const SliceRep&) const = default;
};

struct PrincipalStabilizer {
    CircleSubgroup circle;
    long long finite_part = 1;  // order h of the cyclic component group

    bool operator==(const PrincipalStabilizer& o) const {
        return circle == o.circle && finite_part == o.finite_part;
    }
};

/// All slice representations of the given stabilizer with parameters capped
/// by `bound` (odd m <= bound; torus weights with max(|p|,|q|) <= bound, one
/// per sign class).
std::vector<SliceRep> enumerate_slice_reps(StabilizerTag tag, long long bound);

PrincipalStabilizer principal_stabilizer(const SliceRep& slice);

struct WeightVector {
    long long p = 0, q = 0;
    CartanVector cartan() const { return weight_vector(p, q); }
};

/// Torus weight of the U(2) family member under restriction to the maximal
/// torus: ((m-1)/2, 1). Throws NotOdd.
WeightVector restrict_u2_to_torus(long long m);

/// Generators of the slice representation as real matrices acting on R^dim.
std::vector<Eigen::MatrixXd> real_generators(const SliceRep& slice);

/// Rank test at several random unit vectors: the representation is
/// sphere-transitive iff the Lie algebra orbit of a unit vector spans the
/// full tangent space of the sphere.
bool sphere_transitive_generators(const std::vector<Eigen::MatrixXd>& generators,
                                  int dim, const Tolerances& tol = {},
                                  int num_vectors = 8,
                                  unsigned long long seed = 2024);

bool sphere_transitivity_check(const SliceRep& slice, const Tolerances& tol = {},
                               int num_vectors = 8,
                               unsigned long long seed = 2024);

/// Brute-force component count of {(x,y) on the torus : px + qy integral},
/// discretized on an N x N grid with N = grid_per_unit * max(|p|,|q|).
/// Independent of the gcd formula; used as its oracle.
int torus_weight_component_count(long long p, long long q, int grid_per_unit = 720);

} // namespace su3coh
