#pragma once

#include <memory>

#include "qdouble/characters.hpp"
#include "qdouble/finite_group.hpp"
#include "qdouble/linalg.hpp"

namespace qd {

struct ActionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite G-set X given by its action table. Validated on construction:
// the identity acts trivially and act(gh, xi) = act(g, act(h, xi)).
class GAction {
 public:
  GAction(FiniteGroup group, std::vector<std::vector<int>> table, std::string name);

  const FiniteGroup& group() const { return group_; }
  int set_size() const { return m_; }
  int act(int g, int xi) const { return table_[static_cast<size_t>(g) * m_ + xi]; }
  const std::string& name() const { return name_; }

 private:
  FiniteGroup group_;
  int m_;
  std::vector<int> table_;  // n*m, table_[g*m + xi] = g.xi
  std::string name_;
};

using ActionPtr = std::shared_ptr<const GAction>;

// Structural comparison (pointer equality short-circuits).
bool same_action(const ActionPtr& a, const ActionPtr& b);

// X := G with G acting on itself by conjugation; orbits coincide with the
// conjugacy classes and the orbit base points equal the class representatives.
ActionPtr conjugation_action(const FiniteGroup& g);

// X := G with left translation (transitive, trivial stabilizers).
ActionPtr left_translation_action(const FiniteGroup& g);

// An element F of C(X x G), stored densely: coeffs(xi, g) = F(xi, g).
class AlgElement {
 public:
  AlgElement(ActionPtr action, Matrix coeffs);

  static AlgElement zero(ActionPtr action);
  static AlgElement basis(ActionPtr action, int xi, int g);  // delta_xi (x) delta_g

  const ActionPtr& action() const { return action_; }
  const Matrix& coeffs() const { return coeffs_; }
  Cplx operator()(int xi, int g) const { return coeffs_(xi, g); }
  void set(int xi, int g, Cplx v) { coeffs_(xi, g) = v; }

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator*(Cplx s) const;
  double max_abs_diff(const AlgElement& o) const;

 private:
  ActionPtr action_;
  Matrix coeffs_;  // m x n
};

// (F1 * F2)(xi, y) = sum_z F1(xi, z) F2(z^-1.xi, z^-1 y)
AlgElement multiply(const AlgElement& f1, const AlgElement& f2);

// F*(xi, y) = conj(F(y^-1.xi, y^-1)); finite groups are unimodular so the
// modular factor is identically 1.
AlgElement star(const AlgElement& f);

// 1 = sum_xi delta_xi (x) delta_e
AlgElement unit_element(ActionPtr action);

// ||F||_1 = sum_z max_xi |F(xi, z)|
double norm1(const AlgElement& f);

// <F1, F2> = sum_{xi,z} F1(xi,z) conj(F2(xi,z))
Cplx inner_product(const AlgElement& f1, const AlgElement& f2);

// An orbit of the action with its base point, stabilizer and section.
// section[i] is the smallest group element carrying the base point to
// members[i], except that the base point itself gets the identity.
struct Orbit {
  int index = 0;
  std::vector<int> members;    // ascending; members[0] is the base point
  int base_point = 0;
  Subgroup stabilizer;
  std::vector<int> section;    // aligned with members; section[0] = e

  int size() const { return static_cast<int>(members.size()); }
  int position_of(int xi) const;  // -1 if xi is not a member
};

std::vector<Orbit> orbits(const ActionPtr& action);

}  // namespace qd
