#pragma once

#include <string>
#include <vector>

#include "vpk/report.hpp"
#include "vpk/structure.hpp"

namespace vpk {

enum class AxiomMode { Skew, HalfCommutator, HalfJacobi, All };

struct TripleSource {
  enum Kind { AllBasisTriples, SeededRandom } kind = AllBasisTriples;
  int max_dpow = 2;       // basis sweep: elements d^k u, k <= max_dpow
  long samples = 50;      // random sweep size
  std::uint64_t seed = 0;
  bool include_centrals = true;
  bool s3_reduce = true;  // check only ordered basis triples a <= b <= c
};

// Coefficient-exact verification of (C0)-(C3). (C2) runs as the half skew
// symmetry Y_-(a,x)b = Sing(e^{xd} Y_-(b,-x)a); (C3) as the half commutator
// formula with the fixed (x1-x2)-expansion convention. The half Jacobi mode
// delegates to the half commutator, its equivalent canonical form.
Report check_axioms(const VLStructure& R, AxiomMode mode, const TripleSource& src);

// One skew pair / one commutator triple, exposed for tests and sampling.
bool skew_pair_holds(const VLStructure& R, const RElement& a, const RElement& b,
                     Witness* w = nullptr);
bool half_commutator_holds(const VLStructure& R, const RElement& a,
                           const RElement& b, const RElement& c,
                           Witness* w = nullptr);

// Right-hand side of the half commutator formula,
// Sing(Y_-(Y_-(a,x1-x2)b, x2)c), materialized with expand_neg_binomial.
LaurentTable<RElement> half_commutator_rhs(const VLStructure& R, const RElement& a,
                                           const RElement& b, const RElement& c);
LaurentTable<RElement> half_commutator_lhs(const VLStructure& R, const RElement& a,
                                           const RElement& b, const RElement& c);

// Basis elements d^k u (and optionally centrals) used by the sweeps.
std::vector<RElement> basis_elements(const VLStructure& R, int max_dpow,
                                     bool include_centrals);
RElement random_relement(const VLStructure& R, Lcg64& rng, int max_dpow,
                         bool include_centrals = true);

}  // namespace vpk
