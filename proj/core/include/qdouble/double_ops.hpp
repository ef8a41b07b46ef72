#pragma once

#include <cstdint>
#include <map>

#include "qdouble/induced.hpp"

namespace qd {

struct RankMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DecompositionResidual : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The quantum double D(G) is C(G x G) with the conjugation action; a
// DoubleElement is just an AlgElement over conjugation_action(G).
using DoubleElement = AlgElement;

// An element of D(G)^(x)rank, rank 2 or 3, stored sparsely as a map from the
// packed index tuple (a_1, b_1, ..., a_r, b_r) to its coefficient. Products
// of basis-supported tensors keep exact integer coefficients this way, and
// the rank-3 objects stay affordable at |G| <= 24.
class TensorElement {
 public:
  TensorElement(const FiniteGroup& g, int rank);

  int rank() const { return rank_; }
  const FiniteGroup& group() const { return group_; }

  Cplx at(const std::vector<int>& idx) const;
  void add(const std::vector<int>& idx, Cplx v);

  const std::map<std::uint64_t, Cplx>& entries() const { return coeffs_; }
  std::vector<int> unpack(std::uint64_t key) const;
  std::uint64_t pack(const std::vector<int>& idx) const;

  TensorElement operator-(const TensorElement& o) const;
  double max_abs() const;
  double max_abs_diff(const TensorElement& o) const;
  void prune(double eps = 0.0);

  // simple tensor f1 (x) f2
  static TensorElement simple(const DoubleElement& f1, const DoubleElement& f2);
  // unit of D(G)^(x)rank
  static TensorElement unit(const FiniteGroup& g, int rank);
  // swap the two legs of a rank-2 tensor
  TensorElement flip() const;

 private:
  FiniteGroup group_;
  int rank_;
  std::map<std::uint64_t, Cplx> coeffs_;  // ordered: deterministic iteration
};

// (Delta F)(a1,b1,a2,b2) = F(a1 a2, b1) [b1 = b2]
TensorElement coproduct(const DoubleElement& f);
// (S F)(a,b) = F(b^-1 a^-1 b, b^-1)
DoubleElement antipode(const DoubleElement& f);
// eps(F) = sum_b F(e, b)
Cplx counit(const DoubleElement& f);
// R(a1,b1,a2,b2) = [b1 = e][a1 = b2]
TensorElement r_matrix(const FiniteGroup& g);

// Componentwise product on D(G)^(x)rank.
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
// Rank-2 -> rank-3 with the unit in the omitted slot; slots is 12, 13 or 23.
TensorElement embed(const TensorElement& a, int slots);
// Multiplication map m: D (x) D -> D on a rank-2 tensor.
DoubleElement tensor_contract_product(const TensorElement& t, const ActionPtr& conj_action);
// (Delta (x) id) and (id (x) Delta) on rank-2 tensors.
TensorElement coproduct_leg1(const TensorElement& t);
TensorElement coproduct_leg2(const TensorElement& t);

struct Check {
  std::string id;
  double max_deviation = 0.0;
  bool pass = false;
};
struct Report {
  std::string suite;
  std::string group;
  std::vector<Check> checks;
  bool all_pass() const;
};

// Hooks for acceptance-style negative controls; None leaves the structure
// maps untouched.
enum class NegativeControl { None, CorruptAntipode, FlipR };

// Hopf axioms: coassociativity, both counit laws, both antipode laws,
// multiplicativity and *-compatibility of Delta and eps. Exhaustive over
// basis elements for |G| <= 8, randomized above.
Report verify_hopf(const FiniteGroup& g, unsigned seed = 1,
                   NegativeControl control = NegativeControl::None);

// R Delta = Delta^op R on basis elements, the two coproduct factorizations
// of R, Yang-Baxter, and invertibility with R^-1 = (S (x) id) R.
Report verify_quasitriangular(const FiniteGroup& g, unsigned seed = 1,
                              NegativeControl control = NegativeControl::None);

// Star axioms of the double: involution, antihomomorphism, basis star law.
Report verify_star(const FiniteGroup& g, unsigned seed = 1);

// Irreps of D(G): delegates to all_irreps over the conjugation action, plus
// the (conjugacy class, centralizer irrep) labels.
struct DoubleIrrep {
  InducedIrrep rep;
  int class_representative = 0;
  int alpha_label = 0;
};
std::vector<DoubleIrrep> double_irreps(const FiniteGroup& g, unsigned seed = 1);

// chi(x, g) = trace of the basis matrix at (x, g); vanishes off the pairs
// with x in the class and g commuting with x.
Matrix character(const DoubleIrrep& rep);

// Multiplicities of each double irrep in (rep1 (x) rep2) o Delta, solved from
// characters. Throws DecompositionResidual when the least-squares solution is
// not near-integer.
std::vector<int> tensor_decompose(const DoubleIrrep& rep1, const DoubleIrrep& rep2,
                                  const std::vector<DoubleIrrep>& all,
                                  double residual_tol = 1e-8);

}  // namespace qd
