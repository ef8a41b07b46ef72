#include "qdouble/induced.hpp"

#include <random>

namespace qd {

namespace {

void check_alpha(const Orbit& orbit, const GroupIrrep& alpha) {
  if (static_cast<int>(alpha.matrices.size()) != orbit.stabilizer.order())
    throw NotStabilizerIrrep("alpha is not a representation of the orbit stabilizer");
}

// phi_{j,l} evaluated at x: supported on the coset s_j N_A, where it takes
// the value alpha(n^-1) e_l with n = s_j^-1 x.
// Returns the column vector alpha(n)^-1 e_l, or zero when x is outside.
Vector eval_basis_function(const FiniteGroup& g, const Orbit& orbit,
                           const GroupIrrep& alpha, int j, int l, int x) {
  const int n = g.mul(g.inv(orbit.section[j]), x);
  const int loc = orbit.stabilizer.parent_to_local[n];
  if (loc < 0) return Vector::Zero(alpha.degree);
  return alpha.at(orbit.stabilizer.to_local(g.inv(n))) *
         Vector::Unit(alpha.degree, l);
}

}  // namespace

Matrix InducedIrrep::basis_matrix(int xi, int g) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  const Block b = block_of(xi, g);
  if (b.row >= 0)
    out.block(b.row * alpha_.degree, b.col * alpha_.degree, alpha_.degree,
              alpha_.degree) = *b.alpha_block;
  return out;
}

InducedIrrep::Block InducedIrrep::block_of(int xi, int g) const {
  Block b;
  const int i = orbit_.position_of(xi);
  if (i < 0) return b;
  const int n = action_->group().order();
  b.row = i;
  b.col = col_block_[static_cast<size_t>(i) * n + g];
  b.alpha_block = &alpha_.at(twist_[static_cast<size_t>(i) * n + g]);
  return b;
}

Matrix InducedIrrep::group_matrix(int g) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < orbit_.size(); ++i) {
    const Block b = block_of(orbit_.members[i], g);
    out.block(b.row * alpha_.degree, b.col * alpha_.degree, alpha_.degree,
              alpha_.degree) = *b.alpha_block;
  }
  return out;
}

Matrix InducedIrrep::point_matrix(int xi) const {
  return basis_matrix(xi, action_->group().identity());
}

std::vector<Matrix> InducedIrrep::generator_matrices() const {
  std::vector<Matrix> gens;
  gens.reserve(action_->set_size() + action_->group().order());
  for (int xi = 0; xi < action_->set_size(); ++xi) gens.push_back(point_matrix(xi));
  for (int g = 0; g < action_->group().order(); ++g) gens.push_back(group_matrix(g));
  return gens;
}

Matrix InducedIrrep::apply(const AlgElement& f) const {
  if (!same_action(f.action(), action_))
    throw ActionMismatch("element does not live over this representation's action");
  Matrix out = Matrix::Zero(dim_, dim_);
  const int n = action_->group().order();
  const int d = alpha_.degree;
  for (int i = 0; i < orbit_.size(); ++i) {
    const int xi = orbit_.members[i];
    for (int g = 0; g < n; ++g) {
      const Cplx c = f(xi, g);
      if (c == Cplx(0)) continue;
      const Block b = block_of(xi, g);
      out.block(b.row * d, b.col * d, d, d) += c * (*b.alpha_block);
    }
  }
  return out;
}

InducedIrrep induce(const ActionPtr& action, const Orbit& orbit, const GroupIrrep& alpha) {
  check_alpha(orbit, alpha);
  const FiniteGroup& g = action->group();
  const int n = g.order();
  const int da = alpha.degree;
  const int cosets = orbit.size();

  InducedIrrep rep;
  rep.action_ = action;
  rep.orbit_ = orbit;
  rep.alpha_ = alpha;
  rep.dim_ = cosets * da;
  rep.col_block_.assign(static_cast<size_t>(cosets) * n, -1);
  rep.twist_.assign(static_cast<size_t>(cosets) * n, -1);

  // Evaluate psi = tau(delta_xi (x) delta_y) phi_{j,l} at the section points:
  // psi(x) = sum_z F(x.xi_A, z) phi(z^-1 x). Row i survives only for
  // xi = s_i.xi_A and the z-sum collapses to z = y, so psi(s_i) =
  // phi_{j,l}(y^-1 s_i). The column block is found by scanning all j.
  for (int i = 0; i < cosets; ++i) {
    if (action->act(orbit.section[i], orbit.base_point) != orbit.members[i])
      throw std::logic_error("section does not reach its orbit point");
    for (int y = 0; y < n; ++y) {
      const int x_eval = g.mul(g.inv(y), orbit.section[i]);
      Matrix block;
      int col = -1;
      for (int j = 0; j < cosets; ++j) {
        Matrix m(da, da);
        for (int l = 0; l < da; ++l)
          m.col(l) = eval_basis_function(g, orbit, alpha, j, l, x_eval);
        if (m.cwiseAbs().maxCoeff() > 0.5) {
          if (col >= 0)
            throw std::logic_error("basis element acts by more than one block");
          col = j;
          block = std::move(m);
        }
      }
      if (col < 0) throw std::logic_error("basis element acts by no block");
      // the evaluated block must be alpha of the section twist
      const int tw = orbit.stabilizer.to_local(
          g.mul(g.inv(orbit.section[i]), g.mul(y, orbit.section[col])));
      if (tw < 0 || (block - alpha.at(tw)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::logic_error("evaluated block disagrees with the section twist");
      rep.col_block_[static_cast<size_t>(i) * n + y] = col;
      rep.twist_[static_cast<size_t>(i) * n + y] = tw;
    }
  }
  return rep;
}

InducedIrrep section_form(const ActionPtr& action, const Orbit& orbit,
                          const GroupIrrep& alpha) {
  check_alpha(orbit, alpha);
  const FiniteGroup& g = action->group();
  const int n = g.order();
  const int cosets = orbit.size();

  InducedIrrep rep;
  rep.action_ = action;
  rep.orbit_ = orbit;
  rep.alpha_ = alpha;
  rep.dim_ = cosets * alpha.degree;
  rep.col_block_.assign(static_cast<size_t>(cosets) * n, -1);
  rep.twist_.assign(static_cast<size_t>(cosets) * n, -1);

  // (tau(F) phi)(xi) = sum_z F(xi, z) alpha(s(xi)^-1 z s(z^-1.xi)) phi(z^-1.xi):
  // for F = delta_xi (x) delta_y the column block sits at z^-1.xi.
  for (int i = 0; i < cosets; ++i) {
    const int xi = orbit.members[i];
    for (int y = 0; y < n; ++y) {
      const int j = orbit.position_of(action->act(g.inv(y), xi));
      const int tw = orbit.stabilizer.to_local(
          g.mul(g.inv(orbit.section[i]), g.mul(y, orbit.section[j])));
      if (tw < 0) throw std::logic_error("section twist fell outside the stabilizer");
      rep.col_block_[static_cast<size_t>(i) * n + y] = j;
      rep.twist_[static_cast<size_t>(i) * n + y] = tw;
    }
  }
  return rep;
}

std::optional<Matrix> are_equivalent(const InducedIrrep& rep1, const InducedIrrep& rep2) {
  if (rep1.dim() != rep2.dim()) return std::nullopt;
  const auto basis = intertwiner_space(rep1.generator_matrices(),
                                       rep2.generator_matrices());
  for (const Matrix& t : basis) {
    Eigen::JacobiSVD<Matrix> svd(t);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 1e-8 * sv(0)) return polar_unitary(t);
  }
  return std::nullopt;
}

int commutant_dimension(const InducedIrrep& rep) {
  return commutant_dimension(rep.generator_matrices());
}

std::vector<InducedIrrep> all_irreps(const ActionPtr& action, unsigned seed) {
  std::vector<InducedIrrep> out;
  long long sum = 0;
  for (const Orbit& orbit : orbits(action)) {
    const auto alphas = irreps(orbit.stabilizer, seed);
    for (const GroupIrrep& alpha : alphas) {
      out.push_back(induce(action, orbit, alpha));
      sum += static_cast<long long>(out.back().dim()) * out.back().dim();
    }
  }
  const long long expect =
      static_cast<long long>(action->set_size()) * action->group().order();
  if (sum != expect)
    throw SplittingFailure("completeness sum " + std::to_string(sum) +
                           " != " + std::to_string(expect));
  return out;
}

IrrepFamilyCheck validate_irrep_family(const std::vector<InducedIrrep>& reps,
                                       int num_random_elements, unsigned seed) {
  IrrepFamilyCheck r;
  if (reps.empty()) return r;
  const ActionPtr& action = reps[0].action();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  auto random_element = [&] {
    Matrix c(action->set_size(), action->group().order());
    for (Eigen::Index i = 0; i < c.rows(); ++i)
      for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) = Cplx(unif(rng), unif(rng));
    return AlgElement(action, std::move(c));
  };

  for (const auto& rep : reps) {
    r.sum_dim_sq += static_cast<long long>(rep.dim()) * rep.dim();
    if (commutant_dimension(rep) != 1) r.all_irreducible = false;
    for (int t = 0; t < num_random_elements; ++t) {
      const AlgElement f1 = random_element();
      const AlgElement f2 = random_element();
      r.hom_defect = std::max(
          r.hom_defect, (rep.apply(multiply(f1, f2)) - rep.apply(f1) * rep.apply(f2))
                            .cwiseAbs()
                            .maxCoeff());
      r.star_defect = std::max(
          r.star_defect,
          (rep.apply(star(f1)) - rep.apply(f1).adjoint()).cwiseAbs().maxCoeff());
    }
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (are_equivalent(reps[i], reps[j])) r.pairwise_inequivalent = false;
  r.complete = r.sum_dim_sq == static_cast<long long>(action->set_size()) *
                                   action->group().order();
  return r;
}

}  // namespace qd
