#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vpk {

using Rational = mpq_class;

// Exact scalar: a sparse polynomial in named formal parameters (e.g. ell, h)
// with big-rational coefficients. A plain rational is the empty-key term.
// Keys are sorted (name, exponent>0) lists, so printing is canonical.
class Scalar {
 public:
  using Key = std::vector<std::pair<std::string, int>>;

  Scalar() = default;
  Scalar(long n);  // NOLINT: implicit by design, mirrors integer literals
  explicit Scalar(const Rational& q);

  static Scalar param(const std::string& name, int exp = 1);
  static Scalar from_string(const std::string& text);  // grammar: + - * ^ ( ) p/q name

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  Rational rational_value() const;  // requires is_rational()

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator*=(const Scalar& o);
  Scalar scaled(const Scalar& o) const { return *this * o; }
  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

  // Ring homomorphism sending one parameter to a value.
  Scalar substituted(const std::string& name, const Scalar& value) const;
  int max_param_degree(const std::string& name) const;
  Scalar coefficient_of(const std::string& name, int k) const;
  Scalar truncated(const std::string& name, int order) const;  // drop name^k, k >= order
  bool divisible_by(const std::string& name) const;
  Scalar divided_by(const std::string& name) const;  // exact; requires divisibility
  bool depends_on(const std::string& name) const;
  bool has_params() const;

  // Exact polynomial division: q with *this == q*b, or false if not divisible.
  bool try_divide(const Scalar& b, Scalar& q) const;

  std::string to_string() const;

  const std::map<Key, Rational>& terms() const { return terms_; }

 private:
  void prune();
  std::map<Key, Rational> terms_;
};

Scalar operator*(const Rational& q, const Scalar& s);
Rational binomial(long m, long k);     // C(m,k), m any integer, k >= 0
Rational factorial(long n);
std::string rational_to_string(const Rational& q);

}  // namespace vpk
