#include "vpk/vertex_lie.hpp"

#include <sstream>

namespace vpk {

namespace {

std::string exps_to_string(const std::vector<std::string>& vars,
                           const std::vector<int>& k) {
  std::ostringstream os;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) os << " ";
    os << vars[i] << "^{" << k[i] << "}";
  }
  return os.str();
}

// first differing coefficient between two tables, for witness reporting
void first_difference(const VLStructure& R, const LaurentTable<RElement>& lhs,
                      const LaurentTable<RElement>& rhs, Witness* w) {
  if (w == nullptr) return;
  for (const auto& [k, v] : lhs.terms()) {
    RElement other = rhs.coefficient(k);
    if (!(v == other)) {
      w->monomial = exps_to_string(lhs.vars(), k);
      w->lhs = R.relem_to_string(v);
      w->rhs = R.relem_to_string(other);
      return;
    }
  }
  for (const auto& [k, v] : rhs.terms()) {
    if (lhs.coefficient(k).is_zero()) {
      w->monomial = exps_to_string(rhs.vars(), k);
      w->lhs = "0";
      w->rhs = R.relem_to_string(v);
      return;
    }
  }
}

}  // namespace

bool skew_pair_holds(const VLStructure& R, const RElement& a, const RElement& b,
                     Witness* w) {
  LaurentTable<RElement> lhs = y_minus(R, a, b);
  LaurentTable<RElement> inner = y_minus(R, b, a).negated_var("x");
  LaurentTable<RElement> rhs =
      inner.apply_exp_partial("x", [](const RElement& e) { return e.d(); })
          .sing({"x"});
  if (lhs == rhs) return true;
  first_difference(R, lhs, rhs, w);
  return false;
}

LaurentTable<RElement> half_commutator_lhs(const VLStructure& R, const RElement& a,
                                           const RElement& b, const RElement& c) {
  LaurentTable<RElement> t({"x1", "x2"});
  long nb = mode_bound(R, b, c);
  for (long n = 0; n < nb; ++n) {
    RElement bc = nth_product(R, b, n, c);
    long ma = mode_bound(R, a, bc);
    for (long m = 0; m < ma; ++m) {
      RElement v = nth_product(R, a, m, bc);
      if (!v.is_zero())
        t.add_term({static_cast<int>(-m - 1), static_cast<int>(-n - 1)}, v);
    }
  }
  long na = mode_bound(R, a, c);
  for (long m = 0; m < na; ++m) {
    RElement ac = nth_product(R, a, m, c);
    long mb = mode_bound(R, b, ac);
    for (long n = 0; n < mb; ++n) {
      RElement v = nth_product(R, b, n, ac);
      if (!v.is_zero())
        t.add_term({static_cast<int>(-m - 1), static_cast<int>(-n - 1)},
                   v.scaled(Scalar(-1)));
    }
  }
  return t;
}

LaurentTable<RElement> half_commutator_rhs(const VLStructure& R, const RElement& a,
                                           const RElement& b, const RElement& c) {
  LaurentTable<RElement> acc({"x1", "x2"});
  long ib = mode_bound(R, a, b);
  for (long i = 0; i < ib; ++i) {
    RElement ab = nth_product(R, a, i, b);
    if (ab.is_zero()) continue;
    LaurentTable<RElement> inner = y_minus(R, ab, c, "x2");
    if (inner.is_zero()) continue;
    // i_max: largest j with a nonzero x2^{-j-1} factor, so Sing_{x2} keeps
    // exactly the k <= j part of the expansion
    long jmax = -inner.min_exponent("x2") - 1;
    LaurentTable<Scalar> expansion = expand_neg_binomial("x1", "x2", -i - 1, jmax);
    acc += mul(expansion, inner).aligned_to({"x1", "x2"});
  }
  return acc.sing({"x1", "x2"});
}

bool half_commutator_holds(const VLStructure& R, const RElement& a,
                           const RElement& b, const RElement& c, Witness* w) {
  LaurentTable<RElement> lhs = half_commutator_lhs(R, a, b, c);
  LaurentTable<RElement> rhs = half_commutator_rhs(R, a, b, c);
  if (lhs == rhs) return true;
  first_difference(R, lhs, rhs, w);
  return false;
}

std::vector<RElement> basis_elements(const VLStructure& R, int max_dpow,
                                     bool include_centrals) {
  std::vector<RElement> out;
  for (size_t g = 0; g < R.generators.size(); ++g)
    for (int k = 0; k <= max_dpow; ++k)
      out.push_back(RElement::gen(static_cast<int>(g), k));
  if (include_centrals)
    for (size_t c = 0; c < R.centrals.size(); ++c)
      out.push_back(RElement::central_elem(static_cast<int>(c)));
  return out;
}

RElement random_relement(const VLStructure& R, Lcg64& rng, int max_dpow,
                         bool include_centrals) {
  RElement e;
  long nterms = rng.range(1, 2);
  for (long t = 0; t < nterms; ++t) {
    Scalar coeff(rng.range(-3, 3));
    if (coeff.is_zero()) coeff = Scalar(1);
    long ncentrals = include_centrals ? static_cast<long>(R.centrals.size()) : 0;
    long pick = rng.range(0, static_cast<long>(R.generators.size()) + ncentrals - 1);
    if (pick < static_cast<long>(R.generators.size())) {
      int dpow = static_cast<int>(rng.range(0, max_dpow));
      e += RElement::gen(static_cast<int>(pick), dpow, coeff);
    } else {
      e += RElement::central_elem(
          static_cast<int>(pick - static_cast<long>(R.generators.size())), coeff);
    }
  }
  return e;
}

Report check_axioms(const VLStructure& R, AxiomMode mode, const TripleSource& src) {
  Report rep;
  rep.seed = src.seed;
  rep.caps["max_dpow"] = src.max_dpow;
  if (src.kind == TripleSource::SeededRandom) rep.caps["samples"] = src.samples;

  // (C0) is structural: the product table is finite and validated on load.
  std::string grading_error = R.validate_grading();
  if (grading_error.empty()) {
    rep.pass("c0/structural");
  } else {
    Witness w;
    w.lhs = grading_error;
    rep.fail("c0/structural", w);
  }

  std::vector<RElement> basis = basis_elements(R, src.max_dpow, src.include_centrals);
  auto label = [&](const RElement& e) { return R.relem_to_string(e); };

  bool do_skew = mode == AxiomMode::Skew || mode == AxiomMode::All;
  bool do_comm = mode != AxiomMode::Skew;

  if (src.kind == TripleSource::AllBasisTriples) {
    if (do_skew) {
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i; j < basis.size(); ++j) {
          Witness w;
          w.triple = "(" + label(basis[i]) + ", " + label(basis[j]) + ")";
          bool ok = skew_pair_holds(R, basis[i], basis[j], &w);
          std::string id = "c2/skew[" + std::to_string(i) + "," + std::to_string(j) + "]";
          rep.add(id, ok ? Status::Pass : Status::Fail, ok ? Witness{} : w);
        }
    }
    if (do_comm) {
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i; j < basis.size(); ++j)
          for (size_t k = j; k < basis.size(); ++k) {
            // ordered triples suffice: the half commutator formula is
            // S3-symmetric once the skew and derivative laws hold
            Witness w;
            w.triple = "(" + label(basis[i]) + ", " + label(basis[j]) + ", " +
                       label(basis[k]) + ")";
            bool ok = half_commutator_holds(R, basis[i], basis[j], basis[k], &w);
            std::string id = "c3/half-comm[" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + "]";
            rep.add(id, ok ? Status::Pass : Status::Fail, ok ? Witness{} : w);
          }
      if (!src.s3_reduce) {
        // full unordered sweep, used by the S3-soundness meta test
        for (size_t i = 0; i < basis.size(); ++i)
          for (size_t j = 0; j < basis.size(); ++j)
            for (size_t k = 0; k < basis.size(); ++k) {
              Witness w;
              bool ok = half_commutator_holds(R, basis[i], basis[j], basis[k], &w);
              std::string id = "c3/full-sweep[" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + "]";
              rep.add(id, ok ? Status::Pass : Status::Fail, ok ? Witness{} : w);
            }
      }
    }
  } else {
    Lcg64 rng(src.seed);
    for (long s = 0; s < src.samples; ++s) {
      RElement a = random_relement(R, rng, src.max_dpow, src.include_centrals);
      RElement b = random_relement(R, rng, src.max_dpow, src.include_centrals);
      RElement c = random_relement(R, rng, src.max_dpow, src.include_centrals);
      if (do_skew) {
        Witness w;
        w.triple = "(" + label(a) + ", " + label(b) + ")";
        bool ok = skew_pair_holds(R, a, b, &w);
        rep.add("c2/skew-random[" + std::to_string(s) + "]",
                ok ? Status::Pass : Status::Fail, ok ? Witness{} : w);
      }
      if (do_comm) {
        Witness w;
        w.triple = "(" + label(a) + ", " + label(b) + ", " + label(c) + ")";
        bool ok = half_commutator_holds(R, a, b, c, &w);
        rep.add("c3/half-comm-random[" + std::to_string(s) + "]",
                ok ? Status::Pass : Status::Fail, ok ? Witness{} : w);
      }
    }
  }
  rep.sort_records();
  return rep;
}

}  // namespace vpk
