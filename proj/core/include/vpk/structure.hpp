#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vpk/laurent.hpp"
#include "vpk/scalar.hpp"

namespace vpk {

struct Generator {
  std::string name;
  int weight = 1;
};

// Element of R = (free C[d]-module over the generators) + (central space in ker d).
struct RElement {
  // (generator index, d-power) -> coefficient
  std::map<std::pair<int, int>, Scalar> free;
  // central index -> coefficient
  std::map<int, Scalar> central;

  static RElement gen(int g, int dpow = 0, const Scalar& c = Scalar(1));
  static RElement central_elem(int c, const Scalar& coeff = Scalar(1));

  bool is_zero() const { return free.empty() && central.empty(); }
  RElement& operator+=(const RElement& o);
  RElement operator+(const RElement& o) const;
  RElement operator-() const { return scaled(Scalar(-1)); }
  RElement operator-(const RElement& o) const { return *this + (-o); }
  RElement scaled(const Scalar& s) const;
  bool operator==(const RElement& o) const {
    return free == o.free && central == o.central;
  }
  bool operator!=(const RElement& o) const { return !(*this == o); }
  bool operator<(const RElement& o) const {
    return std::tie(free, central) < std::tie(o.free, o.central);
  }

  // Translation operator: shifts d-powers up, annihilates centrals.
  RElement d(int times = 1) const;
  int max_dpow() const;
};

// Finite structure data for a vertex Lie algebra: named generators with
// weights, central names, and the n-th products of generator pairs.
struct VLStructure {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<Generator> generators;
  std::vector<std::string> centrals;
  // (left gen, right gen, n>=0) -> product value
  std::map<std::tuple<int, int, int>, RElement> products;

  int gen_index(const std::string& n) const;
  int central_index(const std::string& n) const;
  std::optional<int> find_gen(const std::string& n) const;
  std::optional<int> find_central(const std::string& n) const;

  bool pair_defined(int l, int r) const;   // any direct entry for (l, r)
  int direct_bound(int l, int r) const;    // 1 + max n over direct entries
  int pair_bound(int l, int r) const;      // bound valid for both orientations

  // All products homogeneous: wt(u_n v) = wt u + wt v - n - 1, centrals weight 0.
  // Returns an error description, or empty when the grading is consistent.
  std::string validate_grading() const;

  // Structure with every generator product multiplied by `factor`.
  VLStructure scaled_structure(const Scalar& factor) const;

  std::string relem_to_string(const RElement& e) const;
};

// u_n v for generators, deriving the missing orientation through (C2) when
// only the reverse pair is present in the table.
RElement gen_product(const VLStructure& R, int l, int r, long n);

// Bilinear extension to all of R: (C1) reduces the left slot, (C2) swaps when
// the right slot carries d-powers; centrals give zero in either slot.
RElement nth_product(const VLStructure& R, const RElement& a, long n, const RElement& b);

// Alternative right-slot path through the derivative law
// a_n(db) = d(a_n b) + n a_{n-1} b; cross-checked against nth_product in tests.
RElement nth_product_dlaw(const VLStructure& R, const RElement& a, long n,
                          const RElement& b);

// Least N such that a_n b = 0 for all n >= N, from the structure bounds.
long mode_bound(const VLStructure& R, const RElement& a, const RElement& b);

// Y_-(a,x)b = Sum_{n>=0} (a_n b) x^{-n-1}, a finite single-variable table.
LaurentTable<RElement> y_minus(const VLStructure& R, const RElement& a,
                               const RElement& b, const std::string& var = "x");

// ---- builders --------------------------------------------------------------

struct LieAlgebraInput {
  std::vector<std::string> basis;
  // (i, j) -> bracket [b_i, b_j] as a coefficient vector over the basis
  std::map<std::pair<int, int>, std::vector<Scalar>> brackets;
  // (i, j) -> <b_i, b_j>
  std::map<std::pair<int, int>, Scalar> form;
  std::vector<std::string> parameters;
};

// Affine structure: u_0 v = [u,v], u_1 v = <u,v> c, u_n v = 0 for n >= 2.
// Brackets must be antisymmetric and the form symmetric; invariance of the
// form is *not* required here (check_axioms reports its failure as (C3)).
VLStructure affine_builder(const LieAlgebraInput& in);

LieAlgebraInput sl2_input();
LieAlgebraInput heisenberg_input();  // abelian 1-dim with <a,a> = 1

// Single generator L of weight 2: L_0 L = dL, L_1 L = 2L, L_3 L = (1/2)c.
// Shipped as a convenience builder; standard structure constants.
VLStructure virasoro_builder();

}  // namespace vpk
