#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "su3coh/descriptor.hpp"

using namespace su3coh;

TEST_CASE("tube descriptors parse and print") {
    CHECK(parse_tube("S") == TubeDescriptor::s());
    CHECK(parse_tube("L") == TubeDescriptor::l());
    CHECK(parse_tube("P(3)") == TubeDescriptor::proj(3));
    CHECK(parse_tube("F(0,2)") == TubeDescriptor::flag(0, 2));
    CHECK(parse_tube("F( 1 , -1 )") == TubeDescriptor::flag(1, -1));
    CHECK(parse_tube("Squot(2)") == TubeDescriptor::s_quot(2));
    CHECK(parse_tube("Lquot3") == TubeDescriptor::l_quot3());

    // round trip
    for (const char* text : {"S", "L", "P(5)", "F(2,-3)", "Squot(4)", "Lquot3"})
        CHECK(parse_tube(to_text(parse_tube(text))) == parse_tube(text));
}

TEST_CASE("tube parse errors name the offending token") {
    CHECK_THROWS_WITH_AS(parse_tube("Q(1)"), doctest::Contains("Q(1)"), ParseError);
    CHECK_THROWS_WITH_AS(parse_tube("P(x)"), doctest::Contains("x"), ParseError);
    CHECK_THROWS_AS(parse_tube("P(2)"), ParseError);
    CHECK_THROWS_AS(parse_tube("F(1)"), ParseError);
    CHECK_THROWS_AS(parse_tube("F(0,0)"), ParseError);
    CHECK_THROWS_AS(parse_tube("Squot(1)"), ParseError);
}

TEST_CASE("slice descriptors parse in both spellings") {
    CHECK(parse_slice("SU2") == SliceRep::su2_standard());
    CHECK(parse_slice("SO3") == SliceRep::so3_standard());
    CHECK(parse_slice("U2 3") == SliceRep::u2(3));
    CHECK(parse_slice("U2(3)") == SliceRep::u2(3));
    CHECK(parse_slice("T2 4 6") == SliceRep::torus(4, 6));
    CHECK(parse_slice("T2(4,6)") == SliceRep::torus(4, 6));
    CHECK(parse_slice("T2 0 1") == SliceRep::torus(0, 1));
    CHECK_THROWS_AS(parse_slice("U2 4"), ParseError);
    CHECK_THROWS_AS(parse_slice("T2 0 0"), ParseError);
    CHECK_THROWS_WITH_AS(parse_slice("T2 a b"), doctest::Contains("a"), ParseError);
    CHECK_THROWS_AS(parse_slice("SU3"), ParseError);
}
