#include "vpk/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace vpk {

RElement RElement::gen(int g, int dpow, const Scalar& c) {
  RElement e;
  if (!c.is_zero()) e.free[{g, dpow}] = c;
  return e;
}

RElement RElement::central_elem(int c, const Scalar& coeff) {
  RElement e;
  if (!coeff.is_zero()) e.central[c] = coeff;
  return e;
}

RElement& RElement::operator+=(const RElement& o) {
  for (const auto& [k, v] : o.free) {
    auto it = free.find(k);
    if (it == free.end()) {
      free[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) free.erase(it);
    }
  }
  for (const auto& [k, v] : o.central) {
    auto it = central.find(k);
    if (it == central.end()) {
      central[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) central.erase(it);
    }
  }
  return *this;
}

RElement RElement::operator+(const RElement& o) const {
  RElement r = *this;
  r += o;
  return r;
}

RElement RElement::scaled(const Scalar& s) const {
  RElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : free) {
    Scalar c = v * s;
    if (!c.is_zero()) r.free[k] = c;
  }
  for (const auto& [k, v] : central) {
    Scalar c = v * s;
    if (!c.is_zero()) r.central[k] = c;
  }
  return r;
}

RElement RElement::d(int times) const {
  RElement r;
  if (times == 0) return *this;
  for (const auto& [k, v] : free) r.free[{k.first, k.second + times}] = v;
  return r;  // centrals lie in ker d
}

int RElement::max_dpow() const {
  int m = 0;
  for (const auto& [k, v] : free) m = std::max(m, k.second);
  return m;
}

int VLStructure::gen_index(const std::string& n) const {
  auto g = find_gen(n);
  if (!g) throw std::invalid_argument("unknown generator: " + n);
  return *g;
}

int VLStructure::central_index(const std::string& n) const {
  auto c = find_central(n);
  if (!c) throw std::invalid_argument("unknown central: " + n);
  return *c;
}

std::optional<int> VLStructure::find_gen(const std::string& n) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == n) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> VLStructure::find_central(const std::string& n) const {
  for (size_t i = 0; i < centrals.size(); ++i)
    if (centrals[i] == n) return static_cast<int>(i);
  return std::nullopt;
}

bool VLStructure::pair_defined(int l, int r) const {
  auto it = products.lower_bound({l, r, 0});
  return it != products.end() && std::get<0>(it->first) == l &&
         std::get<1>(it->first) == r;
}

int VLStructure::direct_bound(int l, int r) const {
  int bound = 0;
  auto it = products.lower_bound({l, r, 0});
  for (; it != products.end() && std::get<0>(it->first) == l &&
         std::get<1>(it->first) == r;
       ++it) {
    if (!it->second.is_zero()) bound = std::max(bound, std::get<2>(it->first) + 1);
  }
  return bound;
}

int VLStructure::pair_bound(int l, int r) const {
  return std::max(direct_bound(l, r), direct_bound(r, l));
}

std::string VLStructure::validate_grading() const {
  for (const auto& [key, value] : products) {
    auto [l, r, n] = key;
    int expected = generators[l].weight + generators[r].weight - n - 1;
    for (const auto& [fk, coeff] : value.free) {
      int w = generators[fk.first].weight + fk.second;
      if (w != expected) {
        std::ostringstream os;
        os << "product " << generators[l].name << "_" << n << " "
           << generators[r].name << " has a weight-" << w
           << " term; homogeneity requires weight " << expected;
        return os.str();
      }
    }
    for (const auto& [ck, coeff] : value.central) {
      if (expected != 0) {
        std::ostringstream os;
        os << "product " << generators[l].name << "_" << n << " "
           << generators[r].name << " targets central " << centrals[ck]
           << " but has weight " << expected << " (centrals have weight 0)";
        return os.str();
      }
    }
  }
  return {};
}

VLStructure VLStructure::scaled_structure(const Scalar& factor) const {
  VLStructure s = *this;
  for (auto& [k, v] : s.products) v = v.scaled(factor);
  return s;
}

std::string VLStructure::relem_to_string(const RElement& e) const {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit_coeff = [&](const Scalar& c) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c.to_string() << ")*";
  };
  for (const auto& [k, v] : e.free) {
    emit_coeff(v);
    if (k.second == 0)
      os << generators[k.first].name;
    else if (k.second == 1)
      os << "d(" << generators[k.first].name << ")";
    else
      os << "d^" << k.second << "(" << generators[k.first].name << ")";
  }
  for (const auto& [k, v] : e.central) {
    emit_coeff(v);
    os << centrals[k];
  }
  return os.str();
}

RElement gen_product(const VLStructure& R, int l, int r, long n) {
  if (n < 0) return {};
  if (R.pair_defined(l, r)) {
    auto it = R.products.find({l, r, static_cast<int>(n)});
    return it == R.products.end() ? RElement{} : it->second;
  }
  if (!R.pair_defined(r, l)) return {};
  // derive through (C2): u_n v = Sum_i (-1)^{n+i+1} (1/i!) d^i (v_{n+i} u)
  RElement out;
  int bound = R.direct_bound(r, l);
  Rational invfact(1);
  for (long i = 0; n + i < bound; ++i) {
    if (i > 0) invfact /= Rational(i);
    auto it = R.products.find({r, l, static_cast<int>(n + i)});
    if (it == R.products.end() || it->second.is_zero()) continue;
    Rational c = invfact;
    if ((n + i + 1) % 2 != 0) c = -c;
    out += it->second.d(static_cast<int>(i)).scaled(Scalar(c));
  }
  return out;
}

namespace {

// u_m (d^k v) through (C2) with (C1) inside:
// u_m w = Sum_i (-1)^{m+i+1} (1/i!) d^i (w_{m+i} u),  w = d^k v,
// (d^k v)_q u = (-1)^k q(q-1)...(q-k+1) v_{q-k} u.
RElement free_mode_product(const VLStructure& R, int u, long m, int v, int k) {
  if (m < 0) return {};
  if (k == 0) return gen_product(R, u, v, m);
  RElement out;
  long bound = R.pair_bound(v, u) + k;  // w_{m+i} u = 0 once m+i-k >= pair bound
  Rational invfact(1);
  for (long i = 0; m + i < bound; ++i) {
    if (i > 0) invfact /= Rational(i);
    long q = m + i;
    Rational fall(1);
    for (int t = 0; t < k; ++t) fall *= Rational(-(q - t));
    if (fall == 0) continue;
    RElement base = gen_product(R, v, u, q - k);
    if (base.is_zero()) continue;
    Rational c = invfact * fall;
    if ((m + i + 1) % 2 != 0) c = -c;
    out += base.d(static_cast<int>(i)).scaled(Scalar(c));
  }
  return out;
}

}  // namespace

RElement nth_product(const VLStructure& R, const RElement& a, long n,
                     const RElement& b) {
  RElement out;
  if (n < 0) return out;
  for (const auto& [ka, ca] : a.free) {
    auto [u, j] = ka;
    // (C1): (d^j u)_n = (-1)^j n(n-1)...(n-j+1) u_{n-j}
    Rational fall(1);
    for (int t = 0; t < j; ++t) fall *= Rational(-(n - t));
    if (fall == 0) continue;
    long m = n - j;
    for (const auto& [kb, cb] : b.free) {
      auto [v, k] = kb;
      RElement term = free_mode_product(R, u, m, v, k);
      if (!term.is_zero()) out += term.scaled(Scalar(fall) * ca * cb);
    }
  }
  return out;  // centrals annihilate in either slot
}

RElement nth_product_dlaw(const VLStructure& R, const RElement& a, long n,
                          const RElement& b) {
  RElement out;
  if (n < 0) return out;
  for (const auto& [ka, ca] : a.free) {
    auto [u, j] = ka;
    Rational fall(1);
    for (int t = 0; t < j; ++t) fall *= Rational(-(n - t));
    if (fall == 0) continue;
    long m = n - j;
    for (const auto& [kb, cb] : b.free) {
      auto [v, k] = kb;
      // peel right-slot d-powers: u_m(d w) = d(u_m w) + m u_{m-1} w
      std::function<RElement(long, int)> rec = [&](long mode, int dp) -> RElement {
        if (mode < 0) return {};
        if (dp == 0) return gen_product(R, u, v, mode);
        RElement t1 = rec(mode, dp - 1).d();
        RElement t2 = rec(mode - 1, dp - 1).scaled(Scalar(mode));
        return t1 + t2;
      };
      RElement term = rec(m, k);
      if (!term.is_zero()) out += term.scaled(Scalar(fall) * ca * cb);
    }
  }
  return out;
}

long mode_bound(const VLStructure& R, const RElement& a, const RElement& b) {
  long bound = 0;
  for (const auto& [ka, ca] : a.free)
    for (const auto& [kb, cb] : b.free)
      bound = std::max<long>(
          bound, ka.second + kb.second + R.pair_bound(ka.first, kb.first));
  return bound;
}

LaurentTable<RElement> y_minus(const VLStructure& R, const RElement& a,
                               const RElement& b, const std::string& var) {
  LaurentTable<RElement> t({var});
  long bound = mode_bound(R, a, b);
  for (long n = 0; n < bound; ++n) {
    RElement p = nth_product(R, a, n, b);
    if (!p.is_zero()) t.add_term({static_cast<int>(-n - 1)}, p);
  }
  return t;
}

VLStructure affine_builder(const LieAlgebraInput& in) {
  const size_t dim = in.basis.size();
  auto bracket_at = [&](size_t i, size_t j) -> std::vector<Scalar> {
    auto it = in.brackets.find({static_cast<int>(i), static_cast<int>(j)});
    if (it == in.brackets.end()) return std::vector<Scalar>(dim);
    if (it->second.size() != dim)
      throw std::invalid_argument("bracket coefficient vector has wrong length");
    return it->second;
  };
  auto form_at = [&](size_t i, size_t j) -> Scalar {
    auto it = in.form.find({static_cast<int>(i), static_cast<int>(j)});
    return it == in.form.end() ? Scalar() : it->second;
  };
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      auto bij = bracket_at(i, j), bji = bracket_at(j, i);
      for (size_t k = 0; k < dim; ++k)
        if (bij[k] + bji[k] != Scalar())
          throw std::invalid_argument("bracket table is not antisymmetric");
      if (form_at(i, j) != form_at(j, i))
        throw std::invalid_argument("bilinear form is not symmetric");
    }

  VLStructure R;
  R.name = "affine";
  R.parameters = in.parameters;
  for (const auto& b : in.basis) R.generators.push_back({b, 1});
  R.centrals.push_back("c");
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      RElement p0;
      auto bij = bracket_at(i, j);
      for (size_t k = 0; k < dim; ++k)
        if (!bij[k].is_zero()) p0 += RElement::gen(static_cast<int>(k), 0, bij[k]);
      if (!p0.is_zero())
        R.products[{static_cast<int>(i), static_cast<int>(j), 0}] = p0;
      Scalar f = form_at(i, j);
      if (!f.is_zero())
        R.products[{static_cast<int>(i), static_cast<int>(j), 1}] =
            RElement::central_elem(0, f);
    }
  return R;
}

LieAlgebraInput sl2_input() {
  LieAlgebraInput in;
  in.basis = {"e", "h", "f"};
  auto vec = [](long e, long h, long f) {
    return std::vector<Scalar>{Scalar(e), Scalar(h), Scalar(f)};
  };
  in.brackets[{0, 2}] = vec(0, 1, 0);    // [e,f] = h
  in.brackets[{2, 0}] = vec(0, -1, 0);
  in.brackets[{1, 0}] = vec(2, 0, 0);    // [h,e] = 2e
  in.brackets[{0, 1}] = vec(-2, 0, 0);
  in.brackets[{1, 2}] = vec(0, 0, -2);   // [h,f] = -2f
  in.brackets[{2, 1}] = vec(0, 0, 2);
  in.form[{0, 2}] = Scalar(1);           // <e,f> = 1
  in.form[{2, 0}] = Scalar(1);
  in.form[{1, 1}] = Scalar(2);           // <h,h> = 2
  return in;
}

LieAlgebraInput heisenberg_input() {
  LieAlgebraInput in;
  in.basis = {"a"};
  in.form[{0, 0}] = Scalar(1);
  return in;
}

VLStructure virasoro_builder() {
  VLStructure R;
  R.name = "virasoro";
  R.generators.push_back({"L", 2});
  R.centrals.push_back("c");
  R.products[{0, 0, 0}] = RElement::gen(0, 1);               // L_0 L = dL
  R.products[{0, 0, 1}] = RElement::gen(0, 0, Scalar(2));    // L_1 L = 2L
  R.products[{0, 0, 3}] = RElement::central_elem(0, Scalar(Rational(1, 2)));
  return R;
}

}  // namespace vpk
