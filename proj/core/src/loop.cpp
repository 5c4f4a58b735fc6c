#include "vpk/loop.hpp"

#include <sstream>

#include "vpk/vertex_lie.hpp"

namespace vpk {

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [k, v] : o.modes) {
    auto it = modes.find(k);
    if (it == modes.end()) {
      modes[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) modes.erase(it);
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

LoopElement LoopElement::operator+(const LoopElement& o) const {
  LoopElement r = *this;
  r += o;
  return r;
}

LoopElement LoopElement::scaled(const Scalar& s) const {
  LoopElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : modes) {
    Scalar c = v * s;
    if (!c.is_zero()) r.modes[k] = c;
  }
  for (const auto& [k, v] : central) {
    Scalar c = v * s;
    if (!c.is_zero()) r.central[k] = c;
  }
  return r;
}

LoopElement LoopElement::mode(int g, long n, const Scalar& c) {
  LoopElement e;
  if (!c.is_zero()) e.modes[{g, n}] = c;
  return e;
}

LoopElement LoopElement::central_mode(int c, const Scalar& coeff) {
  LoopElement e;
  if (!coeff.is_zero()) e.central[c] = coeff;
  return e;
}

long LoopElement::min_mode() const {
  long m = 0;
  bool any = false;
  for (const auto& [k, v] : modes) {
    if (!any || k.second < m) m = k.second;
    any = true;
  }
  return m;
}

long LoopElement::max_mode() const {
  long m = 0;
  bool any = false;
  for (const auto& [k, v] : modes) {
    if (!any || k.second > m) m = k.second;
    any = true;
  }
  return m;
}

LoopElement canonical_reduce(const VLStructure& R, const RElement& a, long n) {
  LoopElement out;
  for (const auto& [k, coeff] : a.free) {
    auto [g, dp] = k;
    Rational fall(1);
    for (int t = 0; t < dp; ++t) fall *= Rational(-(n - t));
    if (fall == 0) continue;
    out += LoopElement::mode(g, n - dp, coeff * Scalar(fall));
  }
  if (n == -1)
    for (const auto& [c, coeff] : a.central) out += LoopElement::central_mode(c, coeff);
  return out;
}

LoopElement loop_bracket(const VLStructure& R, const LoopElement& x,
                         const LoopElement& y) {
  LoopElement out;
  for (const auto& [kx, cx] : x.modes)
    for (const auto& [ky, cy] : y.modes) {
      auto [u, m] = kx;
      auto [v, n] = ky;
      long bound = R.pair_bound(u, v);
      for (long i = 0; i < bound; ++i) {
        Rational bi = binomial(m, i);
        if (bi == 0) continue;
        RElement uv = gen_product(R, u, v, i);
        if (uv.is_zero()) continue;
        out += canonical_reduce(R, uv, m + n - i).scaled(Scalar(bi) * cx * cy);
      }
    }
  return out;
}

RElement zero_mode_bracket(const VLStructure& R, const RElement& a,
                           const RElement& b) {
  RElement p = nth_product(R, a, 0, b);
  RElement out;
  for (const auto& [k, v] : p.free)
    if (k.second == 0) out.free[k] = v;
  out.central = p.central;
  return out;
}

std::string loop_to_string(const VLStructure& R, const LoopElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : x.modes) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << "(" << v.to_string() << ")*";
    os << R.generators[k.first].name << "(" << k.second << ")";
  }
  for (const auto& [k, v] : x.central) {
    if (!first) os << " + ";
    first = false;
    if (!v.is_one()) os << "(" << v.to_string() << ")*";
    os << R.centrals[k] << "(-1)";
  }
  return os.str();
}

namespace {

struct BasisMode {
  int gen;
  long mode;
};

std::string mode_name(const VLStructure& R, const BasisMode& b) {
  return R.generators[b.gen].name + "(" + std::to_string(b.mode) + ")";
}

}  // namespace

Report check_lie(const VLStructure& R, const LieCheckOptions& opts) {
  Report rep;
  rep.seed = opts.seed;
  rep.caps["mode_window"] = opts.mode_window;
  rep.caps["samples"] = opts.exhaustive ? -1 : opts.samples;

  const long N = opts.mode_window;
  std::vector<BasisMode> all;
  for (size_t g = 0; g < R.generators.size(); ++g)
    for (long n = -N; n <= N; ++n) all.push_back({static_cast<int>(g), n});

  auto check_triple = [&](const BasisMode& A, const BasisMode& B, const BasisMode& C,
                          const std::string& id) {
    LoopElement X = LoopElement::mode(A.gen, A.mode);
    LoopElement Y = LoopElement::mode(B.gen, B.mode);
    LoopElement Z = LoopElement::mode(C.gen, C.mode);
    LoopElement anti = loop_bracket(R, X, Y) + loop_bracket(R, Y, X);
    if (!anti.is_zero()) {
      Witness w;
      w.triple = "(" + mode_name(R, A) + ", " + mode_name(R, B) + ")";
      w.lhs = loop_to_string(R, anti);
      w.rhs = "0";
      rep.fail(id + "/antisym", w);
    } else {
      rep.pass(id + "/antisym");
    }
    LoopElement jac = loop_bracket(R, X, loop_bracket(R, Y, Z));
    jac += loop_bracket(R, Y, loop_bracket(R, Z, X));
    jac += loop_bracket(R, Z, loop_bracket(R, X, Y));
    if (!jac.is_zero()) {
      Witness w;
      w.triple =
          "(" + mode_name(R, A) + ", " + mode_name(R, B) + ", " + mode_name(R, C) + ")";
      w.lhs = loop_to_string(R, jac);
      w.rhs = "0";
      rep.fail(id + "/jacobi", w);
    } else {
      rep.pass(id + "/jacobi");
    }
  };

  if (opts.exhaustive) {
    long idx = 0;
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i; j < all.size(); ++j)
        for (size_t k = j; k < all.size(); ++k)
          check_triple(all[i], all[j], all[k],
                       "lie/triple[" + std::to_string(idx++) + "]");
  } else {
    Lcg64 rng(opts.seed);
    for (long s = 0; s < opts.samples; ++s) {
      BasisMode A = all[rng.below(all.size())];
      BasisMode B = all[rng.below(all.size())];
      BasisMode C = all[rng.below(all.size())];
      check_triple(A, B, C, "lie/sample[" + std::to_string(s) + "]");
    }
  }

  // polar split: modes <= -1 close under bracket; modes >= 0 close up to a
  // central part at -1 (which must in fact vanish; see the minus-side test)
  {
    Lcg64 rng(opts.seed + 1);
    bool minus_ok = true, plus_ok = true;
    for (long s = 0; s < std::min<long>(opts.samples, 50); ++s) {
      int g1 = static_cast<int>(rng.below(R.generators.size()));
      int g2 = static_cast<int>(rng.below(R.generators.size()));
      long m = rng.range(-N, -1);
      long n = rng.range(-N, -1);
      LoopElement br =
          loop_bracket(R, LoopElement::mode(g1, m), LoopElement::mode(g2, n));
      for (const auto& [k, v] : br.modes)
        if (k.second > -1) minus_ok = false;
      m = rng.range(0, N);
      n = rng.range(0, N);
      br = loop_bracket(R, LoopElement::mode(g1, m), LoopElement::mode(g2, n));
      for (const auto& [k, v] : br.modes)
        if (k.second < 0) plus_ok = false;
    }
    rep.add("lie/polar-minus", minus_ok ? Status::Pass : Status::Fail);
    rep.add("lie/polar-plus", plus_ok ? Status::Pass : Status::Fail);
  }

  // zero-mode Lie algebra L(R)_0 = R/dR: antisymmetry and Jacobi mod dR
  {
    Lcg64 rng(opts.seed + 2);
    bool anti_ok = true, jac_ok = true;
    auto project = [](const RElement& e) {
      RElement out;
      for (const auto& [k, v] : e.free)
        if (k.second == 0) out.free[k] = v;
      out.central = e.central;
      return out;
    };
    for (long s = 0; s < std::min<long>(opts.samples, 50); ++s) {
      RElement a = random_relement(R, rng, 2);
      RElement b = random_relement(R, rng, 2);
      RElement c = random_relement(R, rng, 2);
      RElement anti = zero_mode_bracket(R, a, b) + zero_mode_bracket(R, b, a);
      if (!project(anti).is_zero()) anti_ok = false;
      RElement jac = zero_mode_bracket(R, a, zero_mode_bracket(R, b, c));
      jac += zero_mode_bracket(R, b, zero_mode_bracket(R, c, a));
      jac += zero_mode_bracket(R, c, zero_mode_bracket(R, a, b));
      if (!project(jac).is_zero()) jac_ok = false;
    }
    rep.add("lie/zero-mode-antisym", anti_ok ? Status::Pass : Status::Fail);
    rep.add("lie/zero-mode-jacobi", jac_ok ? Status::Pass : Status::Fail);
  }

  rep.sort_records();
  return rep;
}

}  // namespace vpk
