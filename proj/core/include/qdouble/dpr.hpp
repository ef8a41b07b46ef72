#pragma once

#include "qdouble/double_ops.hpp"

namespace qd {

struct NotCentralizerIrrep : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LabelMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Representation of the subalgebra B_A = C(G) (x) C[N_A] on V_alpha:
// a spanning element delta_y (x) n acts by [y = g_A] alpha(n).
struct SubalgebraRep {
  const FiniteGroup* group;
  int class_rep;          // g_A
  Subgroup centralizer;   // N_A
  GroupIrrep alpha;

  // n given as a parent element; throws NotCentralizerIrrep outside N_A
  Matrix at(int y, int n) const;
};

SubalgebraRep subalgebra_rep(const FiniteGroup& g, int class_rep, const GroupIrrep& alpha);

// D(G)-representation on C[G] (x)_alpha V_alpha, carrier basis
// (coset representative x_j, alpha-vector e_k) in the shared section order.
// The group part is the representation of G induced from alpha; the function
// part acts diagonally through f(x_j g_A x_j^-1).
class DprRep {
 public:
  int dim() const { return dim_; }
  const Orbit& orbit() const { return orbit_; }
  const GroupIrrep& alpha() const { return alpha_; }
  const FiniteGroup& group() const { return *group_; }

  const Matrix& group_matrix(int x) const { return group_mats_[x]; }  // Pi(1 (x) x)
  Matrix point_matrix(int a) const;                                   // Pi(delta_a (x) e)
  Matrix basis_matrix(int a, int x) const;  // Pi(delta_a (x) delta_x)
  std::vector<Matrix> generator_matrices() const;

 private:
  friend DprRep induce_dpr(const FiniteGroup&, const Orbit&, const GroupIrrep&);
  const FiniteGroup* group_ = nullptr;
  Orbit orbit_;
  GroupIrrep alpha_;
  int dim_ = 0;
  std::vector<Matrix> group_mats_;
};

// The orbit must come from conjugation_action(group); its base point is the
// class representative g_A and its stabilizer the centralizer N_A.
DprRep induce_dpr(const FiniteGroup& g, const Orbit& orbit, const GroupIrrep& alpha);

// The explicit linear map C[G] (x)_alpha V_alpha -> equivariant functions,
//   x (x) v  |->  (1/|N_A|) sum_n delta_{x n^-1}(.) alpha(n) v,
// assembled by evaluating that sum on the carrier bases. Satisfies
// T Pi(F) = tau(F) T on every basis element F. Throws LabelMismatch when the
// two representations carry different (class, alpha) labels.
Matrix intertwiner_to_induced(const DprRep& dpr, const InducedIrrep& ind);

// The reverse map w |-> sum_x x (x)_alpha w(x); composed with the forward
// intertwiner it is exactly the identity.
Matrix intertwiner_from_induced(const InducedIrrep& ind, const DprRep& dpr);

// For every (A, alpha): residual of T Pi(F) - tau(F) T over all basis F.
Report verify_dpr_equivalence(const FiniteGroup& g, unsigned seed = 1);

}  // namespace qd
