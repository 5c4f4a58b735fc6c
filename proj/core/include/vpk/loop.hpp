#pragma once

#include <map>
#include <string>

#include "vpk/report.hpp"
#include "vpk/structure.hpp"

namespace vpk {

// Canonical representative in L(R) = (R (x) C[t,t^-1]) / image(d(x)1 + 1(x)d/dt):
// d-powers are eliminated by the falling-factorial rule and central summands
// survive only at mode -1.
struct LoopElement {
  std::map<std::pair<int, long>, Scalar> modes;  // (generator, n)
  std::map<int, Scalar> central;                 // central index; mode -1 implicit

  bool is_zero() const { return modes.empty() && central.empty(); }
  LoopElement& operator+=(const LoopElement& o);
  LoopElement operator+(const LoopElement& o) const;
  LoopElement operator-() const { return scaled(Scalar(-1)); }
  LoopElement operator-(const LoopElement& o) const { return *this + (-o); }
  LoopElement scaled(const Scalar& s) const;
  bool operator==(const LoopElement& o) const {
    return modes == o.modes && central == o.central;
  }

  static LoopElement mode(int g, long n, const Scalar& c = Scalar(1));
  static LoopElement central_mode(int c, const Scalar& coeff = Scalar(1));

  long min_mode() const;  // over free modes; 0 when none
  long max_mode() const;
};

// rho(a (x) t^n) in canonical form: (d^k u)(n) = (-1)^k n(n-1)...(n-k+1) u(n-k),
// centrals kept only at n = -1.
LoopElement canonical_reduce(const VLStructure& R, const RElement& a, long n);

// [u(m), v(n)] = Sum_{i>=0} C(m,i) (u_i v)(m+n-i), bilinear; central modes
// bracket to zero.
LoopElement loop_bracket(const VLStructure& R, const LoopElement& x,
                         const LoopElement& y);

// a_0 b reduced mod dR: coset normal form keeps the d-power-0 free part and
// the full central part.
RElement zero_mode_bracket(const VLStructure& R, const RElement& a, const RElement& b);

struct LieCheckOptions {
  long mode_window = 4;  // modes drawn from [-N, N]
  long samples = 200;
  std::uint64_t seed = 0;
  bool exhaustive = false;  // all basis-mode triples in the window
};

// Antisymmetry and Jacobi for the loop bracket, plus the polar-split and
// zero-mode coset properties, verified exactly on the sample.
Report check_lie(const VLStructure& R, const LieCheckOptions& opts);

std::string loop_to_string(const VLStructure& R, const LoopElement& x);

}  // namespace vpk
