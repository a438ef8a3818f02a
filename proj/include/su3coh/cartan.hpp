#pragma once

#include "su3coh/liealg.hpp"
#include "su3coh/rational.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace su3coh {

// Exact calculus in the diagonal Cartan subalgebra, coordinates taken in the
// basis {u, u'}. Under <X,Y> = -tr(XY) the Gram matrix of {u, u'} is
// [[2,-1],[-1,2]].

struct CartanVector {
    Rational a;  // coefficient of u
    Rational b;  // coefficient of u'

    bool is_zero() const { return a == 0 && b == 0; }

    /// Diagonal entries divided by i: (a, b-a, -b).
    std::array<Rational, 3> triple() const { return {a, b - a, -b}; }

    Mat3 matrix() const;
};

/// <x, z> under the {u,u'} Gram matrix, exact.
Rational pairing(const CartanVector& x, const CartanVector& z);

enum class CircleClass { RootType, SingularType, Generic };

const char* to_string(CircleClass c);

/// A circle subgroup of diagonal matrices with weights (k, l, -k-l),
/// in canonical form: coprime and lexicographically greatest over the
/// twelve images under triple permutation and global sign.
struct CircleSubgroup {
    long long k = 1;
    long long l = 0;
    CircleClass cls = CircleClass::RootType;

    std::array<long long, 3> triple() const { return {k, l, -k - l}; }

    /// diag(ki, li, -(k+l)i), the generating algebra line.
    AlgebraElement algebra() const;

    bool operator==(const CircleSubgroup& o) const { return k == o.k && l == o.l; }
};

/// Throws ZeroPair on (0,0).
CircleSubgroup canonicalize(long long k, long long l);

/// Weyl group as permutations of the diagonal triple, together with the
/// global sign used when testing preservation of a line.
struct WeylElement {
    std::array<int, 3> perm;
    int sign;
};

const std::vector<WeylElement>& weyl_sign_elements();  // 12 elements

/// A group element realizing the nontrivial normalizer component of the
/// root-type circle: block [[0,1],[-1,0]] plus 1, so Ad maps u to -u while
/// swapping the first two diagonal entries.
GroupMatrix weyl_tau();

enum class NormalizerComponent { Torus, U2 };

struct NormalizerInfo {
    NormalizerComponent identity_component;
    int component_count;

    bool operator==(const NormalizerInfo&) const = default;
};

/// Component structure of N(U_{k,l}) from the Weyl-orbit count: the number of
/// permutations sending the triple to plus-or-minus itself, divided by the
/// internal Weyl symmetry of the identity component (2 for U(2)).
NormalizerInfo normalizer_components(const CircleSubgroup& c);

/// Component count for N(U_{k,l} x Z_h): unchanged for RootType/Generic,
/// 2 for SingularType once h > 1.
int normalizer_components_nonconnected(const CircleSubgroup& c, long long h);

/// Primitive integer {u,u'}-coordinates of the line <x, z> = 0, solved
/// exactly. Throws ZeroVector.
std::pair<long long, long long> perp_direction_coords(const CartanVector& z);

/// The same line as a canonicalized circle subgroup.
CircleSubgroup perp_line_in_cartan(const CartanVector& z);

/// Weight p z1 + q z2 with z1 = v/3, z2 = (2u+u')/3, in {u,u'} coordinates:
/// ((p+2q)/3, (2p+q)/3).
CartanVector weight_vector(long long p, long long q);

/// Stabilizer-line weight of the 4-dimensional representation family,
/// u/2 + (m/6) v.
CartanVector u2_weight(long long m);

/// Canonical representative of the weight (p,q) under Weyl x global sign:
/// the dominant image (both entries >= 0) ordered so that p <= q.
std::pair<long long, long long> weight_canonical(long long p, long long q);

} // namespace su3coh
