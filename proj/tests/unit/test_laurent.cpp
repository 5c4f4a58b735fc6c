#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vpk/laurent.hpp"
#include "vpk/report.hpp"
#include "vpk/structure.hpp"

using vpk::LaurentTable;
using vpk::Lcg64;
using vpk::Rational;
using vpk::RElement;
using vpk::Scalar;

namespace {

LaurentTable<Scalar> random_table(Lcg64& rng, const std::vector<std::string>& vars,
                                  int lo, int hi, int nterms) {
  LaurentTable<Scalar> t(vars);
  for (int i = 0; i < nterms; ++i) {
    std::vector<int> k(vars.size());
    for (auto& e : k) e = static_cast<int>(rng.range(lo, hi));
    Scalar c(rng.range(-5, 5));
    t.add_term(k, c);
  }
  return t;
}

}  // namespace

TEST_CASE("sing on monomials") {
  // f = x^2 + 3x^-1 + x^-2  ->  3x^-1 + x^-2
  LaurentTable<Scalar> f({"x"});
  f.add_term({2}, Scalar(1));
  f.add_term({-1}, Scalar(3));
  f.add_term({-2}, Scalar(1));
  LaurentTable<Scalar> expected({"x"});
  expected.add_term({-1}, Scalar(3));
  expected.add_term({-2}, Scalar(1));
  CHECK(f.sing({"x"}) == expected);

  // f = x1^-1 x2^3 + x1^-2 x2^-1, both variables selected
  LaurentTable<Scalar> g({"x1", "x2"});
  g.add_term({-1, 3}, Scalar(1));
  g.add_term({-2, -1}, Scalar(1));
  LaurentTable<Scalar> exp2({"x1", "x2"});
  exp2.add_term({-2, -1}, Scalar(1));
  CHECK(g.sing({"x1", "x2"}) == exp2);

  CHECK_THROWS(g.sing({"y"}));
}

TEST_CASE("sing is an idempotent projection and composes per variable") {
  Lcg64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_table(rng, {"x1", "x2"}, -4, 4, 6);
    auto s = f.sing({"x1", "x2"});
    CHECK(s.sing({"x1", "x2"}) == s);
    CHECK(f.sing({"x1"}).sing({"x2"}) == s);
    CHECK(f.sing({"x2"}).sing({"x1"}) == s);
  }
}

TEST_CASE("sing commutes with coordinate derivatives") {
  Lcg64 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_table(rng, {"x1", "x2"}, -4, 4, 6);
    CHECK(f.sing({"x1"}).derivative("x2") == f.derivative("x2").sing({"x1"}));
  }
}

TEST_CASE("Sing(P Sing(B)) = Sing(PB) for polynomial P") {
  Lcg64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto P = random_table(rng, {"x1", "x2"}, 0, 4, 5);  // nonnegative exponents
    auto B = random_table(rng, {"x1", "x2"}, -5, 5, 6);
    auto lhs = vpk::mul(P, B.sing({"x1", "x2"})).sing({"x1", "x2"});
    auto rhs = vpk::mul(P, B).sing({"x1", "x2"});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("expand_neg_binomial") {
  // m=-1, i_max=2 -> x1^-1 + x1^-2 x2 + x1^-3 x2^2
  auto t = vpk::expand_neg_binomial("x1", "x2", -1, 2);
  LaurentTable<Scalar> expected({"x1", "x2"});
  expected.add_term({-1, 0}, Scalar(1));
  expected.add_term({-2, 1}, Scalar(1));
  expected.add_term({-3, 2}, Scalar(1));
  CHECK(t == expected);

  // m=-2, i_max=1 -> x1^-2 + 2 x1^-3 x2
  auto t2 = vpk::expand_neg_binomial("x1", "x2", -2, 1);
  LaurentTable<Scalar> e2({"x1", "x2"});
  e2.add_term({-2, 0}, Scalar(1));
  e2.add_term({-3, 1}, Scalar(2));
  CHECK(t2 == e2);

  // m=-1, i_max=0 -> x1^-1
  auto t3 = vpk::expand_neg_binomial("x1", "x2", -1, 0);
  LaurentTable<Scalar> e3({"x1", "x2"});
  e3.add_term({-1, 0}, Scalar(1));
  CHECK(t3 == e3);

  CHECK_THROWS(vpk::expand_neg_binomial("x1", "x2", 0, 3));
}

TEST_CASE("apply_exp_partial on a two-step nilpotent derivation") {
  // module: RElement over two abstract generators a, b with d(a) = b, d(b) = 0
  auto d = [](const RElement& e) {
    RElement out;
    for (const auto& [k, v] : e.free)
      if (k.first == 0 && k.second == 0) out += RElement::gen(1, 0, v);
    return out;
  };
  LaurentTable<RElement> f({"x"});
  f.add_term({-1}, RElement::gen(0));
  auto res = f.apply_exp_partial("x", d).sing({"x"});
  LaurentTable<RElement> expected({"x"});
  expected.add_term({-1}, RElement::gen(0));
  CHECK(res == expected);

  // deeper pole keeps the first derivative term
  LaurentTable<RElement> g({"x"});
  g.add_term({-2}, RElement::gen(0));
  auto res2 = g.apply_exp_partial("x", d).sing({"x"});
  LaurentTable<RElement> expected2({"x"});
  expected2.add_term({-2}, RElement::gen(0));
  expected2.add_term({-1}, RElement::gen(1));
  CHECK(res2 == expected2);
}

TEST_CASE("apply_exp_partial leaves d-killed coefficients inert") {
  auto d = [](const RElement&) { return RElement(); };
  LaurentTable<RElement> f({"x"});
  f.add_term({-2}, RElement::central_elem(0));
  CHECK(f.apply_exp_partial("x", d).sing({"x"}) == f);
}

TEST_CASE("skew involution A(x) = Sing(e^{xd} B(-x)) is symmetric") {
  // random instances over the free module C[d]a; termination comes from the
  // exponent bound, not nilpotence of d
  std::function<RElement(const RElement&)> df = [](const RElement& e) {
    return e.d();
  };
  Lcg64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentTable<RElement> B({"x"});
    for (int t = 0; t < 3; ++t) {
      int exp = static_cast<int>(rng.range(-3, -1));
      int dp = static_cast<int>(rng.range(0, 1));
      B.add_term({exp}, RElement::gen(0, dp, Scalar(rng.range(-2, 2))));
    }
    B = B.sing({"x"});
    auto A = B.negated_var("x").apply_exp_partial("x", df).sing({"x"});
    auto B2 = A.negated_var("x").apply_exp_partial("x", df).sing({"x"});
    CHECK(B2 == B);
  }
}
