#include <doctest.h>

#include "wha/scalar.hpp"

#include <stdexcept>

using wha::Scalar;

TEST_CASE("scalar text form round-trips") {
  for (const char* s : {"0", "1", "-3", "2/3", "-7/4", "1/2+3/4*i", "5-1*i", "0+2*i", "-1/3-2/5*i"}) {
    Scalar x = Scalar::parse(s);
    CHECK(Scalar::parse(x.str()) == x);
  }
  CHECK(Scalar::parse("4/6").str() == "2/3");
  CHECK(Scalar::parse("0+2*i").str() == "0+2*i");
  CHECK(Scalar::parse("3+0*i").str() == "3");
  CHECK(Scalar::parse("  -10/4 ").str() == "-5/2");
}

TEST_CASE("malformed scalars are rejected") {
  for (const char* s : {"", "1/", "/2", "1/0", "abc", "1+2i", "1.5", "+*i", "1//2"}) {
    CHECK_THROWS_AS(Scalar::parse(s), std::invalid_argument);
  }
}

TEST_CASE("field axioms hold exactly") {
  Scalar a = Scalar::parse("2/3+1/5*i");
  Scalar b = Scalar::parse("-7/2");
  Scalar c = Scalar::parse("1-3*i");
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * a.inverse() == Scalar(1));
  CHECK(c / c == Scalar(1));
  CHECK((a - a).is_zero());
  // i^2 = -1
  Scalar i = Scalar::parse("0+1*i");
  CHECK(i * i == Scalar(-1));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}
