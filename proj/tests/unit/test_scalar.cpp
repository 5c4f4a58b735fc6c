#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vpk/scalar.hpp"

using vpk::Rational;
using vpk::Scalar;

TEST_CASE("rational arithmetic is exact") {
  Scalar a(Rational(1, 3));
  Scalar b(Rational(1, 6));
  CHECK(a + b == Scalar(Rational(1, 2)));
  CHECK(a - a == Scalar());
  CHECK((a * b).rational_value() == Rational(1, 18));
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(7).to_string() == "7");
  CHECK(Scalar(Rational(-3, 4)).to_string() == "-3/4");
}

TEST_CASE("parameter polynomials") {
  Scalar ell = Scalar::param("ell");
  Scalar p = ell * ell + Scalar(2) * ell + Scalar(1);
  CHECK(p.to_string() == "1 + 2*ell + ell^2");
  CHECK(p.max_param_degree("ell") == 2);
  CHECK(p.coefficient_of("ell", 1) == Scalar(2));
  CHECK(!p.is_rational());
  CHECK(p.depends_on("ell"));
  CHECK(!p.depends_on("h"));

  // specialization is a ring homomorphism (spot check)
  Scalar q = ell - Scalar(5);
  Scalar at2_pq = (p * q).substituted("ell", Scalar(2));
  Scalar prod = p.substituted("ell", Scalar(2)) * q.substituted("ell", Scalar(2));
  CHECK(at2_pq == prod);
  CHECK(at2_pq.rational_value() == Rational(-27));
}

TEST_CASE("ring axioms spot checks") {
  Scalar x = Scalar::param("ell") + Scalar(1);
  Scalar y = Scalar::param("h") - Scalar(3);
  Scalar z = Scalar::param("ell") * Scalar::param("h");
  CHECK((x + y) + z == x + (y + z));
  CHECK(x * (y + z) == x * y + x * z);
  CHECK(x * y == y * x);
  CHECK(x * Scalar(1) == x);
  CHECK(x + (-x) == Scalar());
}

TEST_CASE("h-divisibility and truncation") {
  Scalar h = Scalar::param("h");
  Scalar ell = Scalar::param("ell");
  Scalar s = h * ell + h * h * Scalar(3);
  CHECK(s.divisible_by("h"));
  CHECK(s.divided_by("h") == ell + Scalar(3) * h);
  CHECK(!(s + Scalar(1)).divisible_by("h"));
  CHECK(s.truncated("h", 2) == h * ell);
  CHECK(s.coefficient_of("h", 0).is_zero());
  CHECK(s.coefficient_of("h", 1) == ell);
}

TEST_CASE("exact polynomial division") {
  Scalar ell = Scalar::param("ell");
  Scalar a = (ell + Scalar(1)) * (ell - Scalar(2));
  Scalar q;
  REQUIRE(a.try_divide(ell + Scalar(1), q));
  CHECK(q == ell - Scalar(2));
  CHECK_FALSE(a.try_divide(ell + Scalar(3), q));
  REQUIRE(Scalar().try_divide(ell, q));
  CHECK(q.is_zero());
}

TEST_CASE("string round trips") {
  for (const char* text : {"1", "-3/4", "ell", "2*ell^2 + 1", "1/2*h*ell - 7",
                           "ell^3 - ell + 1/3"}) {
    Scalar s = Scalar::from_string(text);
    CHECK(Scalar::from_string(s.to_string()) == s);
  }
  CHECK(Scalar::from_string("(ell+1)*(ell-1)") ==
        Scalar::from_string("ell^2 - 1"));
  CHECK(Scalar::from_string("2/4") == Scalar(Rational(1, 2)));
  CHECK_THROWS(Scalar::from_string("ell +"));
  CHECK_THROWS(Scalar::from_string("3 ^"));
}

TEST_CASE("binomials for negative upper index") {
  CHECK(vpk::binomial(-1, 0) == Rational(1));
  CHECK(vpk::binomial(-1, 2) == Rational(1));
  CHECK(vpk::binomial(-2, 1) == Rational(-2));
  CHECK(vpk::binomial(3, 2) == Rational(3));
  CHECK(vpk::binomial(2, 5) == Rational(0));
  CHECK(vpk::factorial(5) == Rational(120));
}
