#pragma once

#include "su3coh/reps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace su3coh {

/// Tubular neighborhood of a singular orbit: the orbit type together with
/// its sphere-transitive slice.
///   S        5-sphere SU(3)/SU(2), standard 3-dim slice
///   L        SU(3)/SO(3), standard 3-dim slice
///   P(m)     projective-plane tube with the 4-dim slice of odd parameter m
///   F(p,q)   flag-manifold tube with torus slice of weight (p,q)
///   Squot(h) quotient S/Z_h, h > 1, standard slice
///   Lquot3   quotient L/Z_3, standard slice
struct TubeDescriptor {
    enum class Kind { S, L, P, F, SQuot, LQuot3 };

    Kind kind = Kind::S;
    long long m = 0;        // P parameter
    long long p = 0, q = 0; // F weight
    long long h = 0;        // SQuot order

    static TubeDescriptor s() { return {}; }
    static TubeDescriptor l();
    static TubeDescriptor proj(long long m);            // throws NotOdd
    static TubeDescriptor flag(long long p, long long q);  // throws ZeroPair
    static TubeDescriptor s_quot(long long h);          // throws InvalidArgument unless h > 1
    static TubeDescriptor l_quot3();

    SliceRep slice() const;
    bool operator==(const TubeDescriptor&) const = default;
};

/// Principal stabilizer of the tube, including the quotient tubes' cyclic
/// component group.
PrincipalStabilizer principal_stabilizer(const TubeDescriptor& t);

/// Whether the odd normalizer component of a RootType principal stabilizer
/// extends over the tube, making the twisted gluing equivalent to the
/// identity gluing. Throws NotRootType when the question does not arise.
bool tube_absorbs_tau(const TubeDescriptor& t);

struct GluingCount {
    enum class Reason { NoMatch, UniqueByConnectedNormalizer, TauAbsorbed, TwoClasses };

    int count = 0;
    Reason reason = Reason::NoMatch;

    bool operator==(const GluingCount&) const = default;
};

const char* to_string(GluingCount::Reason r);

/// Number of equivariant diffeomorphism classes obtained by gluing the two
/// tubes along their principal orbit. Throws IncompatibleRegime when a
/// quotient tube is paired with a tube of different finite part.
GluingCount count_diffeo_classes(const TubeDescriptor& t1, const TubeDescriptor& t2);

std::vector<std::pair<TubeDescriptor, GluingCount>>
admissible_partners(const TubeDescriptor& t, long long bound);

struct CircleBaseResult {
    bool trivial_bundle = true;
    bool nontrivial_bundle_exists = false;
};

/// Bundles over the circle with principal orbit attached to (k,l): the
/// trivial bundle always exists; a second, nontrivial one exactly for the
/// RootType class.
CircleBaseResult classify_circle_base(long long k, long long l);

struct NamedExample {
    std::string row, col, name;
};

struct CountTable {
    std::string id;
    std::string caption;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<int>> cells;
    std::vector<NamedExample> named_examples;
};

struct InfoTable {
    std::string id;
    std::string caption;
    std::vector<std::string> row_labels, col_labels;
    std::vector<std::vector<std::string>> cells;
};

struct TableSet {
    InfoTable slice_table;
    CountTable connected;   // stabilizers SU(2), U(2), SO(3)
    CountTable torus;       // one stabilizer of type T^2, gcd(p,q) = 1
    CountTable quotient;    // non-connected principal stabilizers, gcd > 1
};

/// Gluing-class tables computed through the matching rule engine.
TableSet emit_tables(long long bound);

/// The same tables evaluated directly from the closed delta formulas on
/// canonical labels; an independent oracle for emit_tables.
TableSet emit_tables_delta(long long bound);

/// Known manifolds realized by specific tube pairs.
const std::vector<NamedExample>& named_example_registry();

// Label enumerations shared by both table paths.
std::vector<TubeDescriptor> table_p_tubes(long long bound);
std::vector<TubeDescriptor> table_f_tubes(long long bound, bool coprime);
std::string tube_label(const TubeDescriptor& t);

} // namespace su3coh
