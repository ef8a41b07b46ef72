#pragma once

#include <optional>

#include "qdouble/tga.hpp"

namespace qd {

struct NotStabilizerIrrep : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Irreducible *-representation tau attached to (orbit A, alpha in N_A-hat).
//
// Carrier: functions phi on G with phi(x n) = alpha(n^-1) phi(x) for n in the
// stabilizer, encoded on the basis (coset i in section order, alpha-vector k);
// dimension [G : N_A] * deg(alpha). Every basis element delta_xi (x) delta_g
// acts by a single block: row block at the coset of xi, column block at the
// coset of g^-1.xi, block value alpha(s_i^-1 g s_j). The blocks are found by
// evaluating the defining sum on the carrier basis, not assumed.
class InducedIrrep {
 public:
  const ActionPtr& action() const { return action_; }
  const Orbit& orbit() const { return orbit_; }
  const GroupIrrep& alpha() const { return alpha_; }
  int dim() const { return dim_; }
  int deg_alpha() const { return alpha_.degree; }

  // dense matrix of the basis element delta_xi (x) delta_g
  Matrix basis_matrix(int xi, int g) const;
  // matrix of 1 (x) g = sum_xi delta_xi (x) delta_g
  Matrix group_matrix(int g) const;
  // matrix of delta_xi (x) delta_e (a projection onto the coset block of xi)
  Matrix point_matrix(int xi) const;

  // Generating family (all point projections, then all group elements);
  // commuting/intertwining with these is equivalent to doing so for the
  // whole algebra image.
  std::vector<Matrix> generator_matrices() const;

  Matrix apply(const AlgElement& f) const;

  // nonzero block of basis element (xi, g): row block, col block, alpha block;
  // row < 0 when xi lies outside the orbit.
  struct Block {
    int row = -1;
    int col = -1;
    const Matrix* alpha_block = nullptr;
  };
  Block block_of(int xi, int g) const;

 private:
  friend InducedIrrep induce(const ActionPtr&, const Orbit&, const GroupIrrep&);
  friend InducedIrrep section_form(const ActionPtr&, const Orbit&, const GroupIrrep&);

  ActionPtr action_;
  Orbit orbit_;
  GroupIrrep alpha_;  // matrices indexed by stabilizer-local element index
  int dim_ = 0;
  // per (orbit position i, group element g): column block and local stabilizer
  // element, so the block value is alpha(n)
  std::vector<int> col_block_;   // i * n + g -> j
  std::vector<int> twist_;       // i * n + g -> local index n in N_A
};

// Carrier model of equivariant functions on G; matrices extracted by direct
// evaluation of (tau(F) phi)(x) = sum_z F(x.xi_A, z) phi(z^-1 x) over the
// carrier basis at the section points.
InducedIrrep induce(const ActionPtr& action, const Orbit& orbit, const GroupIrrep& alpha);

// Alternate carrier of functions on the orbit itself,
// (tau(F) phi)(xi) = sum_z F(xi, z) alpha(s(xi)^-1 z s(z^-1.xi)) phi(z^-1.xi),
// filled from that closed form. Unitarily equivalent to induce().
InducedIrrep section_form(const ActionPtr& action, const Orbit& orbit,
                          const GroupIrrep& alpha);

// None when no invertible intertwiner T with T rep1(F) = rep2(F) T exists;
// otherwise a unitary one (polar-normalized).
std::optional<Matrix> are_equivalent(const InducedIrrep& rep1, const InducedIrrep& rep2);

int commutant_dimension(const InducedIrrep& rep);

// One induced irrep per (orbit, stabilizer irrep), in orbit-then-alpha order.
// Checks sum dim^2 = |X| * |G| and throws SplittingFailure if violated.
std::vector<InducedIrrep> all_irreps(const ActionPtr& action, unsigned seed = 1);

// Deep verification of a family of induced irreps: homomorphism and star
// residuals over random elements, commutant dimension 1, pairwise
// inequivalence. Returns the worst residual; tolerances enforced by callers.
struct IrrepFamilyCheck {
  double hom_defect = 0.0;
  double star_defect = 0.0;
  bool all_irreducible = true;
  bool pairwise_inequivalent = true;
  bool complete = false;
  long long sum_dim_sq = 0;
};
IrrepFamilyCheck validate_irrep_family(const std::vector<InducedIrrep>& reps,
                                       int num_random_elements = 20, unsigned seed = 7);

}  // namespace qd
