#include "qdouble/dpr.hpp"

namespace qd {

Matrix SubalgebraRep::at(int y, int n) const {
  const int loc = centralizer.to_local(n);
  if (loc < 0)
    throw NotCentralizerIrrep("element " + std::to_string(n) +
                              " lies outside the centralizer");
  if (y != class_rep) return Matrix::Zero(alpha.degree, alpha.degree);
  return alpha.at(loc);
}

SubalgebraRep subalgebra_rep(const FiniteGroup& g, int class_rep, const GroupIrrep& alpha) {
  SubalgebraRep rep{&g, class_rep, centralizer(g, class_rep), alpha};
  if (static_cast<int>(alpha.matrices.size()) != rep.centralizer.order())
    throw NotCentralizerIrrep("alpha is not a representation of the centralizer");
  return rep;
}

DprRep induce_dpr(const FiniteGroup& g, const Orbit& orbit, const GroupIrrep& alpha) {
  if (static_cast<int>(alpha.matrices.size()) != orbit.stabilizer.order())
    throw NotCentralizerIrrep("alpha is not a representation of the centralizer");
  DprRep rep;
  rep.group_ = &g;
  rep.orbit_ = orbit;
  rep.alpha_ = alpha;
  const int cosets = orbit.size();
  const int da = alpha.degree;
  rep.dim_ = cosets * da;

  // Pi(1 (x) y)(x_j (x) v) = y x_j (x) v = x_i (x) alpha(n) v with
  // y x_j = x_i n the coset decomposition.
  rep.group_mats_.resize(g.order());
  for (int y = 0; y < g.order(); ++y) {
    Matrix m = Matrix::Zero(rep.dim_, rep.dim_);
    for (int j = 0; j < cosets; ++j) {
      const int yx = g.mul(y, orbit.section[j]);
      // the coset of yx is read off the orbit: yx . g_A = (yx) g_A (yx)^-1
      const int target = g.conj(yx, orbit.base_point);
      const int i = orbit.position_of(target);
      const int n = g.mul(g.inv(orbit.section[i]), yx);
      const int loc = orbit.stabilizer.to_local(n);
      if (loc < 0) throw std::logic_error("coset decomposition left the centralizer");
      m.block(i * da, j * da, da, da) = alpha.at(loc);
    }
    rep.group_mats_[y] = std::move(m);
  }
  return rep;
}

Matrix DprRep::point_matrix(int a) const {
  // Pi(delta_a (x) e) projects onto the blocks with x_j g_A x_j^-1 = a
  const int da = alpha_.degree;
  Matrix m = Matrix::Zero(dim_, dim_);
  const int pos = orbit_.position_of(a);
  if (pos >= 0) m.block(pos * da, pos * da, da, da) = Matrix::Identity(da, da);
  return m;
}

Matrix DprRep::basis_matrix(int a, int x) const {
  // delta_a (x) delta_x = (delta_a (x) e)(1 (x) x)
  return point_matrix(a) * group_matrix(x);
}

std::vector<Matrix> DprRep::generator_matrices() const {
  std::vector<Matrix> gens;
  gens.reserve(group_->order() * 2);
  for (int a = 0; a < group_->order(); ++a) gens.push_back(point_matrix(a));
  for (int x = 0; x < group_->order(); ++x) gens.push_back(group_matrix(x));
  return gens;
}

namespace {

void require_same_label(const DprRep& dpr, const InducedIrrep& ind) {
  if (dpr.orbit().base_point != ind.orbit().base_point ||
      dpr.alpha().degree != ind.alpha().degree ||
      dpr.alpha().label != ind.alpha().label || dpr.dim() != ind.dim())
    throw LabelMismatch("representations carry different (class, alpha) labels");
}

}  // namespace

Matrix intertwiner_to_induced(const DprRep& dpr, const InducedIrrep& ind) {
  require_same_label(dpr, ind);
  const FiniteGroup& g = dpr.group();
  const Orbit& orbit = dpr.orbit();
  const GroupIrrep& alpha = dpr.alpha();
  const int da = alpha.degree;
  const int cosets = orbit.size();
  const double scale = 1.0 / orbit.stabilizer.order();

  // column (j, l): the function w = (1/|N_A|) sum_n delta_{x_j n^-1} alpha(n) e_l,
  // expanded over the equivariant-function basis by evaluation at the
  // section points s_i.
  Matrix t = Matrix::Zero(dpr.dim(), dpr.dim());
  for (int j = 0; j < cosets; ++j) {
    const int xj = orbit.section[j];
    for (int l = 0; l < da; ++l) {
      for (int i = 0; i < cosets; ++i) {
        Vector w = Vector::Zero(da);
        for (int nl = 0; nl < orbit.stabilizer.order(); ++nl) {
          const int n = orbit.stabilizer.to_parent(nl);
          if (g.mul(xj, g.inv(n)) != orbit.section[i]) continue;
          w += scale * (alpha.at(nl) * Vector::Unit(da, l));
        }
        t.block(i * da, j * da + l, da, 1) += w;
      }
    }
  }
  return t;
}

Matrix intertwiner_from_induced(const InducedIrrep& ind, const DprRep& dpr) {
  require_same_label(dpr, ind);
  const FiniteGroup& g = dpr.group();
  const Orbit& orbit = dpr.orbit();
  const GroupIrrep& alpha = dpr.alpha();
  const int da = alpha.degree;

  // column (i, k): phi_{i,k} |-> sum_x x (x)_alpha phi_{i,k}(x); each x = s_j n
  // contributes at the coset block j the vector alpha(n) phi(s_j n).
  Matrix t = Matrix::Zero(dpr.dim(), dpr.dim());
  for (int i = 0; i < orbit.size(); ++i) {
    for (int k = 0; k < da; ++k) {
      for (int x = 0; x < g.order(); ++x) {
        const int j = orbit.position_of(g.conj(x, orbit.base_point));
        const int n = g.mul(g.inv(orbit.section[j]), x);
        const int nl = orbit.stabilizer.to_local(n);
        if (nl < 0) throw std::logic_error("coset decomposition left the centralizer");
        // phi_{i,k}(s_j n) = alpha(n^-1) e_k on the coset of s_i, else 0
        if (j != i) continue;
        const Vector val = alpha.at(orbit.stabilizer.to_local(g.inv(n))) *
                           Vector::Unit(da, k);
        t.block(j * da, i * da + k, da, 1) += alpha.at(nl) * val;
      }
    }
  }
  return t;
}

Report verify_dpr_equivalence(const FiniteGroup& g, unsigned seed) {
  Report rep{"dpr", g.name(), {}};
  const ActionPtr action = conjugation_action(g);
  const int n = g.order();
  for (const Orbit& orbit : orbits(action)) {
    const auto alphas = irreps(orbit.stabilizer, seed);
    for (const GroupIrrep& alpha : alphas) {
      const InducedIrrep ind = induce(action, orbit, alpha);
      const DprRep dpr = induce_dpr(g, orbit, alpha);
      const Matrix t = intertwiner_to_induced(dpr, ind);
      const Matrix t_rev = intertwiner_from_induced(ind, dpr);

      double dev = (t_rev * t - Matrix::Identity(t.rows(), t.cols()))
                       .cwiseAbs()
                       .maxCoeff();
      for (int a = 0; a < n; ++a)
        for (int x = 0; x < n; ++x) {
          const Matrix lhs = t * dpr.basis_matrix(a, x);
          const Matrix rhs = ind.basis_matrix(a, x) * t;
          dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
        }
      rep.checks.push_back({"class" + std::to_string(orbit.base_point) + "-alpha" +
                                std::to_string(alpha.label),
                            dev, dev <= 1e-12});
    }
  }
  return rep;
}

}  // namespace qd
