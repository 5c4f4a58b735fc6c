#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vpk/loop.hpp"
#include "vpk/vertex_lie.hpp"

using namespace vpk;

namespace {
VLStructure heisenberg() { return affine_builder(heisenberg_input()); }
VLStructure sl2() { return affine_builder(sl2_input()); }
}  // namespace

TEST_CASE("canonical_reduce") {
  VLStructure H = heisenberg();
  RElement a = RElement::gen(0);

  // (da, n) -> -n a(n-1)
  for (long n : {-3L, -1L, 0L, 2L}) {
    LoopElement r = canonical_reduce(H, a.d(), n);
    CHECK(r == LoopElement::mode(0, n - 1, Scalar(-n)));
  }
  // central at mode 3 vanishes, survives only at -1
  CHECK(canonical_reduce(H, RElement::central_elem(0), 3).is_zero());
  CHECK(canonical_reduce(H, RElement::central_elem(0), -1) ==
        LoopElement::central_mode(0));
  // (d^2 a, 2) -> 2 a(0): apply the k=1 rule twice, (-1)^2 * 2 * 1
  CHECK(canonical_reduce(H, a.d(2), 2) == LoopElement::mode(0, 0, Scalar(2)));
  // idempotence through linearity: reducing a reduced element's parts is stable
  LoopElement x = canonical_reduce(H, a.d(3) + a.scaled(Scalar(2)), -2);
  LoopElement y = canonical_reduce(H, a.d(3), -2) +
                  canonical_reduce(H, a.scaled(Scalar(2)), -2);
  CHECK(x == y);
}

TEST_CASE("bracket examples") {
  VLStructure H = heisenberg();
  // [a(2), a(-2)] = C(2,1) (a_1 a)(-1) = 2 c(-1)
  LoopElement b = loop_bracket(H, LoopElement::mode(0, 2), LoopElement::mode(0, -2));
  CHECK(b == LoopElement::central_mode(0, Scalar(2)));
  // [a(1), a(2)]: c would land at t^2, which reduces to zero
  CHECK(loop_bracket(H, LoopElement::mode(0, 1), LoopElement::mode(0, 2)).is_zero());

  VLStructure S = sl2();
  int e = S.gen_index("e"), f = S.gen_index("f"), h = S.gen_index("h");
  LoopElement ef = loop_bracket(S, LoopElement::mode(e, 1), LoopElement::mode(f, -1));
  LoopElement expected = LoopElement::mode(h, 0) + LoopElement::central_mode(0);
  CHECK(ef == expected);

  // central modes bracket to zero
  CHECK(loop_bracket(S, LoopElement::central_mode(0), LoopElement::mode(e, 3))
            .is_zero());
}

TEST_CASE("heisenberg relations [a(m), a(n)] = m delta_{m+n,0} c(-1)") {
  VLStructure H = heisenberg();
  for (long m = -4; m <= 4; ++m)
    for (long n = -4; n <= 4; ++n) {
      LoopElement b =
          loop_bracket(H, LoopElement::mode(0, m), LoopElement::mode(0, n));
      if (m + n == 0)
        CHECK(b == LoopElement::central_mode(0, Scalar(m)));
      else
        CHECK(b.is_zero());
    }
}

TEST_CASE("check_lie passes for built-ins and fails for the mutant") {
  LieCheckOptions opts;
  opts.mode_window = 4;
  opts.samples = 200;

  Report rh = check_lie(heisenberg(), opts);
  CHECK(rh.all_passed());

  Report rs = check_lie(sl2(), opts);
  CHECK(rs.all_passed());

  LieAlgebraInput broken = sl2_input();
  broken.form.clear();
  broken.form[{0, 0}] = Scalar(1);  // <e,e> = 1 breaks invariance
  Report rb = check_lie(affine_builder(broken), opts);
  CHECK(rb.count(Status::Fail) > 0);
}

TEST_CASE("exhaustive window check for heisenberg") {
  LieCheckOptions opts;
  opts.mode_window = 2;
  opts.exhaustive = true;
  Report r = check_lie(heisenberg(), opts);
  CHECK(r.all_passed());
}

TEST_CASE("zero-mode bracket") {
  VLStructure S = sl2();
  RElement e = RElement::gen(S.gen_index("e"));
  RElement f = RElement::gen(S.gen_index("f"));
  RElement h = RElement::gen(S.gen_index("h"));
  CHECK(zero_mode_bracket(S, e, f) == h);

  VLStructure H = heisenberg();
  RElement a = RElement::gen(0);
  CHECK(zero_mode_bracket(H, a, a).is_zero());
  // (du)_0 v = 0 by (C1)
  CHECK(zero_mode_bracket(S, e.d(), f).is_zero());
  CHECK(zero_mode_bracket(S, h.d(2), e).is_zero());
}

TEST_CASE("minus-side polar closure is exact") {
  VLStructure S = sl2();
  Lcg64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    int g1 = static_cast<int>(rng.below(3));
    int g2 = static_cast<int>(rng.below(3));
    long m = rng.range(-5, -1);
    long n = rng.range(-5, -1);
    LoopElement br =
        loop_bracket(S, LoopElement::mode(g1, m), LoopElement::mode(g2, n));
    for (const auto& [k, v] : br.modes) CHECK(k.second <= -1);
  }
}
