#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vpk/scalar.hpp"

namespace vpk {

// Finitely supported Laurent expression in named formal variables with
// coefficients in a module M. M must provide: default ctor (zero),
// operator+=, scaled(Scalar), is_zero(), operator==.
template <class M>
class LaurentTable {
 public:
  using Key = std::vector<int>;

  LaurentTable() = default;
  explicit LaurentTable(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Key, M>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable: " + name);
  }

  void add_term(const Key& exps, const M& coeff) {
    if (exps.size() != vars_.size())
      throw std::invalid_argument("exponent arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_[exps] = coeff;
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentTable& operator+=(const LaurentTable& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }

  LaurentTable operator+(const LaurentTable& o) const {
    LaurentTable r = *this;
    r += o;
    return r;
  }

  LaurentTable operator-() const { return scaled(Scalar(-1)); }

  LaurentTable operator-(const LaurentTable& o) const { return *this + (-o); }

  LaurentTable scaled(const Scalar& s) const {
    LaurentTable r(vars_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v.scaled(s));
    return r;
  }

  bool operator==(const LaurentTable& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentTable& o) const { return !(*this == o); }

  // Keep terms whose exponent in every selected variable is <= -1.
  LaurentTable sing(const std::vector<std::string>& sel) const {
    if (sel.empty()) throw std::invalid_argument("sing: empty variable set");
    std::vector<int> idx;
    idx.reserve(sel.size());
    for (const auto& name : sel) idx.push_back(var_index(name));
    LaurentTable r(vars_);
    for (const auto& [k, v] : terms_) {
      bool keep = true;
      for (int i : idx)
        if (k[i] >= 0) {
          keep = false;
          break;
        }
      if (keep) r.terms_[k] = v;
    }
    return r;
  }

  LaurentTable sing_all() const { return sing(vars_); }

  LaurentTable derivative(const std::string& var) const {
    int i = var_index(var);
    LaurentTable r(vars_);
    for (const auto& [k, v] : terms_) {
      if (k[i] == 0) continue;
      Key nk = k;
      nk[i] -= 1;
      r.add_term(nk, v.scaled(Scalar(k[i])));
    }
    return r;
  }

  // substitute var -> -var
  LaurentTable negated_var(const std::string& var) const {
    int i = var_index(var);
    LaurentTable r(vars_);
    for (const auto& [k, v] : terms_)
      r.add_term(k, (k[i] % 2 == 0) ? v : v.scaled(Scalar(-1)));
    return r;
  }

  // multiply by var^shift
  LaurentTable shifted(const std::string& var, int shift) const {
    int i = var_index(var);
    LaurentTable r(vars_);
    for (const auto& [k, v] : terms_) {
      Key nk = k;
      nk[i] += shift;
      r.terms_[nk] = v;
    }
    return r;
  }

  int min_exponent(const std::string& var) const {
    int i = var_index(var);
    int best = 0;
    bool any = false;
    for (const auto& [k, v] : terms_) {
      if (!any || k[i] < best) best = k[i];
      any = true;
    }
    return best;
  }

  M coefficient(const Key& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? M() : it->second;
  }

  // Embed into a superset variable list (missing exponents are zero).
  LaurentTable aligned_to(const std::vector<std::string>& nv) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(nv.begin(), nv.end(), vars_[i]);
      if (it == nv.end())
        throw std::invalid_argument("aligned_to: missing variable " + vars_[i]);
      where[i] = static_cast<int>(it - nv.begin());
    }
    LaurentTable r(nv);
    for (const auto& [k, v] : terms_) {
      Key nk(nv.size(), 0);
      for (size_t i = 0; i < k.size(); ++i) nk[where[i]] = k[i];
      r.add_term(nk, v);
    }
    return r;
  }

  // Sum_{j>=0} (1/j!) var^j d^j(f), truncated once every surviving term has a
  // var-exponent >= 0 (such terms are dropped by the sing that always follows).
  LaurentTable apply_exp_partial(const std::string& var,
                                 const std::function<M(const M&)>& d) const {
    if (is_zero()) return *this;
    int jmax = -min_exponent(var) - 1;  // largest j with some exponent+j <= -1
    LaurentTable r(vars_);
    LaurentTable current = *this;
    Rational invfact(1);
    for (int j = 0; j <= jmax && !current.is_zero(); ++j) {
      if (j > 0) {
        LaurentTable next(vars_);
        for (const auto& [k, v] : current.terms_) next.add_term(k, d(v));
        current = next;
        invfact /= Rational(j);
      }
      r += current.shifted(var, j).scaled(Scalar(invfact));
    }
    return r;
  }

  template <class M2>
  LaurentTable<M2> mapped(const std::function<M2(const M&)>& f) const {
    LaurentTable<M2> r(vars_);
    for (const auto& [k, v] : terms_) r.add_term(k, f(v));
    return r;
  }

  std::string to_string(const std::function<std::string(const M&)>& pr) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << pr(v) << ")";
      for (size_t i = 0; i < vars_.size(); ++i)
        if (k[i] != 0) os << " " << vars_[i] << "^{" << k[i] << "}";
    }
    return os.str();
  }

 private:
  std::vector<std::string> vars_;
  std::map<Key, M> terms_;
};

// Scalar is itself a module over Scalar.
inline LaurentTable<Scalar> scalar_table(std::vector<std::string> vars) {
  return LaurentTable<Scalar>(std::move(vars));
}

// Truncated expansion of (x1 - x2)^m for m < 0 in nonnegative powers of the
// second variable: Sum_{k=0}^{i_max} C(m,k)(-1)^k x1^{m-k} x2^k.
inline LaurentTable<Scalar> expand_neg_binomial(const std::string& x1,
                                                const std::string& x2, long m,
                                                long i_max) {
  if (m >= 0)
    throw std::invalid_argument("expand_neg_binomial: m >= 0; use the finite binomial");
  if (i_max < 0) throw std::invalid_argument("expand_neg_binomial: i_max < 0");
  LaurentTable<Scalar> r({x1, x2});
  for (long k = 0; k <= i_max; ++k) {
    Rational c = binomial(m, k);
    if (k % 2 == 1) c = -c;
    r.add_term({static_cast<int>(m - k), static_cast<int>(k)}, Scalar(c));
  }
  return r;
}

// Product of a Scalar-coefficient table with an M-coefficient table; the
// result lives over the union of the variable lists (left list first).
template <class M>
LaurentTable<M> mul(const LaurentTable<Scalar>& p, const LaurentTable<M>& b) {
  std::vector<std::string> vars = p.vars();
  for (const auto& v : b.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  LaurentTable<Scalar> pa = p.aligned_to(vars);
  LaurentTable<M> ba = b.aligned_to(vars);
  LaurentTable<M> r(vars);
  for (const auto& [kp, vp] : pa.terms())
    for (const auto& [kb, vb] : ba.terms()) {
      std::vector<int> k(vars.size());
      for (size_t i = 0; i < k.size(); ++i) k[i] = kp[i] + kb[i];
      r.add_term(k, vb.scaled(vp));
    }
  return r;
}

}  // namespace vpk
