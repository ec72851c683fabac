#include "simplexcolor/error.hpp"
#include "simplexcolor/rational.hpp"

#include <catch_amalgamated.hpp>

using namespace simplexcolor;

TEST_CASE("parse_rational accepts integers, fractions and decimals exactly")
{
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_rational(" 0.1 ") == make_rational(1, 10));
    CHECK(parse_rational("-1.25e-3") == make_rational(-1, 800));
    CHECK(parse_rational("2E3") == 2000);
    CHECK(parse_rational(".5") == make_rational(1, 2));
}

TEST_CASE("parse_rational rejects junk")
{
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "0x10", "1/2/3"})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("canonical text form")
{
    CHECK(to_string(make_rational(4, -6)) == "-2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(parse_rational(to_string(make_rational(355, 113))) == make_rational(355, 113));
    CHECK_THROWS_AS(make_rational(1, 0), InputError);
}

TEST_CASE("doubles convert to their exact binary value")
{
    CHECK(rational_from_double(0.5) == make_rational(1, 2));
    CHECK(rational_from_double(0.1) != make_rational(1, 10));
    CHECK(rational_from_double(0.1).get_d() == 0.1);
    CHECK(rational_from_double(-3.0) == -3);
}

TEST_CASE("sign")
{
    CHECK(sign(make_rational(-1, 9)) == -1);
    CHECK(sign(Rational(0)) == 0);
    CHECK(sign(Rational(2)) == 1);
}
