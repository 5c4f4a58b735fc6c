#include "vpk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vpk {

Scalar::Scalar(long n) {
  if (n != 0) terms_[{}] = Rational(n);
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_[{}] = q;
}

Scalar Scalar::param(const std::string& name, int exp) {
  Scalar s;
  if (exp == 0) return Scalar(1);
  if (exp < 0) throw std::invalid_argument("parameter exponent must be >= 0");
  s.terms_[{{name, exp}}] = Rational(1);
  return s;
}

bool Scalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

Rational Scalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("Scalar has parameters: " + to_string());
  return terms_.begin()->second;
}

void Scalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, v] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

namespace {

Scalar::Key merge_keys(const Scalar::Key& a, const Scalar::Key& b) {
  Scalar::Key out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  for (const auto& [ka, va] : terms_)
    for (const auto& [kb, vb] : o.terms_) {
      Key k = merge_keys(ka, kb);
      auto it = r.terms_.find(k);
      if (it == r.terms_.end())
        r.terms_[std::move(k)] = va * vb;
      else
        it->second += va * vb;
    }
  r.prune();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::substituted(const std::string& name, const Scalar& value) const {
  Scalar r;
  for (const auto& [k, v] : terms_) {
    Key rest;
    int exp = 0;
    for (const auto& p : k) {
      if (p.first == name)
        exp = p.second;
      else
        rest.push_back(p);
    }
    Scalar base;
    base.terms_[rest] = v;
    for (int i = 0; i < exp; ++i) base *= value;
    r += base;
  }
  return r;
}

int Scalar::max_param_degree(const std::string& name) const {
  int d = 0;
  for (const auto& [k, v] : terms_)
    for (const auto& p : k)
      if (p.first == name) d = std::max(d, p.second);
  return d;
}

Scalar Scalar::coefficient_of(const std::string& name, int kdeg) const {
  Scalar r;
  for (const auto& [k, v] : terms_) {
    Key rest;
    int exp = 0;
    for (const auto& p : k) {
      if (p.first == name)
        exp = p.second;
      else
        rest.push_back(p);
    }
    if (exp == kdeg) r.terms_[rest] = v;
  }
  r.prune();
  return r;
}

Scalar Scalar::truncated(const std::string& name, int order) const {
  Scalar r;
  for (const auto& [k, v] : terms_) {
    int exp = 0;
    for (const auto& p : k)
      if (p.first == name) exp = p.second;
    if (exp < order) r.terms_[k] = v;
  }
  return r;
}

bool Scalar::divisible_by(const std::string& name) const {
  for (const auto& [k, v] : terms_) {
    bool found = false;
    for (const auto& p : k)
      if (p.first == name && p.second >= 1) found = true;
    if (!found) return false;
  }
  return true;
}

Scalar Scalar::divided_by(const std::string& name) const {
  Scalar r;
  for (const auto& [k, v] : terms_) {
    Key nk;
    bool found = false;
    for (const auto& p : k) {
      if (p.first == name) {
        found = true;
        if (p.second > 1) nk.emplace_back(p.first, p.second - 1);
      } else {
        nk.push_back(p);
      }
    }
    if (!found) throw std::logic_error("Scalar not divisible by " + name);
    r.terms_[nk] = v;
  }
  return r;
}

bool Scalar::depends_on(const std::string& name) const {
  for (const auto& [k, v] : terms_)
    for (const auto& p : k)
      if (p.first == name) return true;
  return false;
}

bool Scalar::has_params() const {
  for (const auto& [k, v] : terms_)
    if (!k.empty()) return true;
  return false;
}

namespace {

long total_degree(const Scalar::Key& k) {
  long d = 0;
  for (const auto& p : k) d += p.second;
  return d;
}

// graded-lex order on keys, compatible with key multiplication
bool key_less(const Scalar::Key& a, const Scalar::Key& b) {
  long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

// a / b on single keys; false when exponents do not dominate
bool key_divide(const Scalar::Key& a, const Scalar::Key& b, Scalar::Key& out) {
  out.clear();
  size_t i = 0;
  for (const auto& pb : b) {
    while (i < a.size() && a[i].first < pb.first) out.push_back(a[i++]);
    if (i == a.size() || a[i].first != pb.first || a[i].second < pb.second) return false;
    if (a[i].second > pb.second) out.emplace_back(a[i].first, a[i].second - pb.second);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return true;
}

}  // namespace

bool Scalar::try_divide(const Scalar& b, Scalar& q) const {
  q = Scalar();
  if (is_zero()) return true;
  if (b.is_zero()) return false;
  if (b.is_rational()) {
    Rational inv = 1 / b.rational_value();
    for (const auto& [k, v] : terms_) q.terms_[k] = v * inv;
    return true;
  }
  // leading term of b under graded-lex
  auto blead = b.terms_.begin()->first;
  for (const auto& [k, v] : b.terms_)
    if (key_less(blead, k)) blead = k;
  Rational bcoef = b.terms_.at(blead);

  Scalar rem = *this;
  while (!rem.is_zero()) {
    auto rlead = rem.terms_.begin()->first;
    for (const auto& [k, v] : rem.terms_)
      if (key_less(rlead, k)) rlead = k;
    Key kq;
    if (!key_divide(rlead, blead, kq)) return false;
    Scalar t;
    t.terms_[kq] = rem.terms_.at(rlead) / bcoef;
    q += t;
    rem -= t * b;
  }
  return true;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    Rational a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coef_one = (a == 1) && !k.empty();
    if (!coef_one) os << rational_to_string(a);
    bool need_star = !coef_one;
    for (const auto& p : k) {
      if (need_star) os << "*";
      os << p.first;
      if (p.second != 1) os << "^" << p.second;
      need_star = true;
    }
  }
  return os.str();
}

Scalar operator*(const Rational& q, const Scalar& s) { return Scalar(q) * s; }

Rational binomial(long m, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) {
    r *= Rational(m - i);
    r /= Rational(i + 1);
  }
  return r;
}

Rational factorial(long n) {
  Rational r(1);
  for (long i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// ---- parsing --------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at offset " + std::to_string(i) +
                                ": " + what + " in \"" + s + "\"");
  }

  Scalar parse_expr() {
    skip();
    bool neg = eat('-');
    if (!neg) eat('+');
    Scalar r = parse_term();
    if (neg) r = -r;
    for (;;) {
      skip();
      if (eat('+'))
        r += parse_term();
      else if (eat('-'))
        r -= parse_term();
      else
        break;
    }
    return r;
  }

  Scalar parse_term() {
    Scalar r = parse_factor();
    for (;;) {
      skip();
      if (eat('*'))
        r *= parse_factor();
      else
        break;
    }
    return r;
  }

  Scalar parse_factor() {
    Scalar base = parse_atom();
    skip();
    if (eat('^')) {
      skip();
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("expected exponent");
      int e = std::stoi(s.substr(i, j - i));
      i = j;
      Scalar r(1);
      for (int t = 0; t < e; ++t) r *= base;
      return r;
    }
    return base;
  }

  Scalar parse_atom() {
    skip();
    if (eat('(')) {
      Scalar r = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::string num = s.substr(i, j - i);
      i = j;
      skip();
      if (i < s.size() && s[i] == '/') {
        ++i;
        skip();
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail("expected denominator");
        std::string den = s.substr(i, k - i);
        i = k;
        Rational q(num + "/" + den);
        q.canonicalize();
        return Scalar(q);
      }
      return Scalar(Rational(num));
    }
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string name = s.substr(i, j - i);
      i = j;
      return Scalar::param(name);
    }
    fail("expected number, name or '('");
  }
};

}  // namespace

Scalar Scalar::from_string(const std::string& text) {
  Parser p(text);
  Scalar r = p.parse_expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace vpk
