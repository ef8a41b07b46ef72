#pragma once

#include <complex>
#include <vector>

#include "qdouble/finite_group.hpp"
#include "qdouble/linalg.hpp"

namespace qd {

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SplittingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One unitary matrix per group element. Homomorphism and unitarity hold to
// 1e-12; irreducibility means commutant dimension 1.
struct GroupIrrep {
  int degree = 0;
  int label = 0;  // row index in the matching CharacterTable
  std::vector<Matrix> matrices;  // indexed by element

  const Matrix& at(int g) const { return matrices[g]; }
  // character on a class representative
  Cplx trace(int g) const { return matrices[g].trace(); }
};

struct CharacterTable {
  std::vector<ConjClass> classes;
  std::vector<int> degrees;                // per row
  std::vector<std::vector<Cplx>> rows;     // rows[irrep][class]

  int num_classes() const { return static_cast<int>(classes.size()); }
  int class_of(int elem) const;  // linear scan, fine at desk scale
};

// Complete character table. Abelian groups take an exact root-of-unity path;
// nonabelian groups go through simultaneous eigenvectors of random
// combinations of the class-sum matrices, with retries on eigenvector
// collisions (ConvergenceFailure after the retry budget).
// Rows are sorted canonically: degree ascending, then by value columns.
// Supported up to order 200.
CharacterTable character_table(const FiniteGroup& g, unsigned seed = 1);

// One explicit unitary irrep per character-table row, ordered and labeled to
// match the rows. Nonabelian groups use randomized invariant-subspace
// splitting of the regular representation (SplittingFailure after retries);
// abelian groups get their exact 1-dimensional characters directly.
std::vector<GroupIrrep> irreps(const FiniteGroup& g, unsigned seed = 1);
std::vector<GroupIrrep> irreps(const Subgroup& h, unsigned seed = 1);

}  // namespace qd
