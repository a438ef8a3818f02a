#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3coh/cartan.hpp"

#include <numeric>
#include <set>

using namespace su3coh;

TEST_CASE("canonicalize divides out common factors and classifies") {
    const auto c = canonicalize(2, -2);
    CHECK(c.cls == CircleClass::RootType);
    CHECK(c == canonicalize(1, -1));
    CHECK(canonicalize(1, 0) == canonicalize(1, -1));
    CHECK(canonicalize(2, -1).cls == CircleClass::SingularType);
    CHECK(canonicalize(2, -1) == canonicalize(1, 1));
    CHECK(canonicalize(3, 1).cls == CircleClass::Generic);
    CHECK_THROWS_AS(su3coh::canonicalize(0, 0), ZeroPair);
}

TEST_CASE("canonicalize is idempotent and orbit-invariant") {
    for (long long k = -10; k <= 10; ++k)
        for (long long l = -10; l <= 10; ++l) {
            if (k == 0 && l == 0) continue;
            const auto c = canonicalize(k, l);
            CHECK(canonicalize(c.k, c.l) == c);
            // every signed permutation of the triple lands in the same class
            const auto t = c.triple();
            for (const auto& w : weyl_sign_elements()) {
                const long long nk = w.sign * t[w.perm[0]];
                const long long nl = w.sign * t[w.perm[1]];
                CHECK(canonicalize(nk, nl) == c);
            }
        }
}

TEST_CASE("class trichotomy is exhaustive and exclusive") {
    for (long long k = -10; k <= 10; ++k)
        for (long long l = -10; l <= 10; ++l) {
            if (k == 0 && l == 0) continue;
            if (std::gcd(std::abs(k), std::abs(l)) != 1) continue;
            const auto t = canonicalize(k, l).triple();
            const bool has_zero = t[0] == 0 || t[1] == 0 || t[2] == 0;
            const bool has_equal = t[0] == t[1] || t[0] == t[2] || t[1] == t[2];
            const auto cls = canonicalize(k, l).cls;
            if (has_zero) CHECK(cls == CircleClass::RootType);
            else if (has_equal) CHECK(cls == CircleClass::SingularType);
            else CHECK(cls == CircleClass::Generic);
        }
}

TEST_CASE("normalizer component structure follows the class") {
    CHECK(normalizer_components(canonicalize(1, -1)) ==
          NormalizerInfo{NormalizerComponent::Torus, 2});
    CHECK(normalizer_components(canonicalize(1, 1)) ==
          NormalizerInfo{NormalizerComponent::U2, 1});
    CHECK(normalizer_components(canonicalize(3, 1)) ==
          NormalizerInfo{NormalizerComponent::Torus, 1});

    for (long long k = -10; k <= 10; ++k)
        for (long long l = -10; l <= 10; ++l) {
            if (k == 0 && l == 0) continue;
            const auto c = canonicalize(k, l);
            const auto info = normalizer_components(c);
            switch (c.cls) {
                case CircleClass::RootType:
                    CHECK(info == NormalizerInfo{NormalizerComponent::Torus, 2});
                    break;
                case CircleClass::SingularType:
                    CHECK(info == NormalizerInfo{NormalizerComponent::U2, 1});
                    break;
                case CircleClass::Generic:
                    CHECK(info == NormalizerInfo{NormalizerComponent::Torus, 1});
                    break;
            }
        }
}

TEST_CASE("the explicit tau element realizes the odd normalizer component") {
    const GroupMatrix tau = weyl_tau();
    CHECK(is_group_matrix(tau.m, Tolerances{}));
    // Ad_tau flips the root circle direction u and fixes the singular
    // direction v, so it normalizes both circles without lying in the torus
    CHECK((adjoint(tau, cartan_u()).m + cartan_u().m).norm() < 1e-14);
    CHECK((adjoint(tau, cartan_v()).m - cartan_v().m).norm() < 1e-14);
    CHECK(tau.m.cwiseAbs().diagonal().minCoeff() < 0.5);  // not diagonal
}

TEST_CASE("normalizer components of U_{k,l} x Z_h") {
    CHECK(normalizer_components_nonconnected(canonicalize(1, 1), 2) == 2);
    CHECK(normalizer_components_nonconnected(canonicalize(1, -1), 3) == 2);
    CHECK(normalizer_components_nonconnected(canonicalize(1, 1), 1) == 1);
    CHECK(normalizer_components_nonconnected(canonicalize(5, 2), 4) == 1);
    CHECK_THROWS_AS(normalizer_components_nonconnected(canonicalize(1, 1), 0),
                    InvalidArgument);
}

TEST_CASE("perpendicular lines in the Cartan plane") {
    // weight of the 4-dim family at m = 1: the root line through u'
    CHECK(perp_line_in_cartan(u2_weight(1)) == canonicalize(0, 1));
    CHECK(perp_line_in_cartan(u2_weight(1)).cls == CircleClass::RootType);
    // m = 3 gives a singular stabilizer line
    const auto m3 = perp_line_in_cartan(u2_weight(3));
    CHECK(m3.cls == CircleClass::SingularType);
    CHECK(m3 == canonicalize(1, -2));
    CHECK(m3 == canonicalize(2, -1));
    // the lattice vector z2 = (2u+u')/3 is perpendicular to the u' line
    CHECK(perp_line_in_cartan(weight_vector(0, 1)) == canonicalize(0, 1));
    CHECK_THROWS_AS(perp_line_in_cartan(CartanVector{0, 0}), ZeroVector);
}

TEST_CASE("perpendicular line is exactly orthogonal") {
    for (long long pn = -9; pn <= 9; ++pn)
        for (long long qn = -9; qn <= 9; ++qn) {
            if (pn == 0 && qn == 0) continue;
            const CartanVector z{Rational(pn, 3), Rational(qn, 6)};
            const auto [da, db] = perp_direction_coords(z);
            const CartanVector dir{Rational(da), Rational(db)};
            CHECK(pairing(dir, z) == Rational(0));
            CHECK_FALSE(dir.is_zero());
        }
}

TEST_CASE("Gram matrix of the {u,u'} basis") {
    const CartanVector eu{1, 0}, eup{0, 1};
    CHECK(pairing(eu, eu) == Rational(2));
    CHECK(pairing(eup, eup) == Rational(2));
    CHECK(pairing(eu, eup) == Rational(-1));
}

TEST_CASE("weight canonicalization picks the dominant representative") {
    CHECK(weight_canonical(1, 0) == std::pair{0ll, 1ll});
    CHECK(weight_canonical(1, -1) == std::pair{0ll, 1ll});
    CHECK(weight_canonical(-1, -1) == std::pair{1ll, 1ll});
    CHECK(weight_canonical(2, 1) == std::pair{1ll, 2ll});
    CHECK(weight_canonical(2, -2) == std::pair{0ll, 2ll});
    // idempotent and orbit-invariant under sign
    for (long long p = -6; p <= 6; ++p)
        for (long long q = -6; q <= 6; ++q) {
            if (p == 0 && q == 0) continue;
            const auto c = weight_canonical(p, q);
            CHECK(weight_canonical(c.first, c.second) == c);
            CHECK(weight_canonical(-p, -q) == c);
        }
}
