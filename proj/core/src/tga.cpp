#include "qdouble/tga.hpp"

#include <algorithm>

namespace qd {

GAction::GAction(FiniteGroup group, std::vector<std::vector<int>> table, std::string name)
    : group_(std::move(group)), name_(std::move(name)) {
  const int n = group_.order();
  if (static_cast<int>(table.size()) != n)
    throw UnsupportedParams("action table must have one row per group element");
  m_ = table.empty() ? 0 : static_cast<int>(table[0].size());
  if (m_ <= 0) throw UnsupportedParams("action on an empty set");
  table_.resize(static_cast<size_t>(n) * m_);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(table[g].size()) != m_)
      throw UnsupportedParams("ragged action table at row " + std::to_string(g));
    for (int xi = 0; xi < m_; ++xi) {
      const int v = table[g][xi];
      if (v < 0 || v >= m_)
        throw UnsupportedParams("action entry out of range at (" + std::to_string(g) +
                                "," + std::to_string(xi) + ")");
      table_[static_cast<size_t>(g) * m_ + xi] = v;
    }
  }
  for (int xi = 0; xi < m_; ++xi)
    if (act(group_.identity(), xi) != xi)
      throw UnsupportedParams("identity does not act trivially at point " +
                              std::to_string(xi));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const int gh = group_.mul(g, h);
      for (int xi = 0; xi < m_; ++xi)
        if (act(gh, xi) != act(g, act(h, xi)))
          throw UnsupportedParams("action not compatible with the product at (" +
                                  std::to_string(g) + "," + std::to_string(h) + "," +
                                  std::to_string(xi) + ")");
    }
}

ActionPtr conjugation_action(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) t[y][x] = g.conj(y, x);
  return std::make_shared<GAction>(g, std::move(t), "conj(" + g.name() + ")");
}

ActionPtr left_translation_action(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) t[y][x] = g.mul(y, x);
  return std::make_shared<GAction>(g, std::move(t), "left(" + g.name() + ")");
}

bool same_action(const ActionPtr& a, const ActionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->set_size() != b->set_size()) return false;
  const int n = a->group().order();
  if (n != b->group().order()) return false;
  if (a->group().cayley_flat() != b->group().cayley_flat()) return false;
  for (int g = 0; g < n; ++g)
    for (int xi = 0; xi < a->set_size(); ++xi)
      if (a->act(g, xi) != b->act(g, xi)) return false;
  return true;
}

namespace {

void require_same_action(const AlgElement& f1, const AlgElement& f2) {
  if (!same_action(f1.action(), f2.action()))
    throw ActionMismatch("elements live over different actions");
}

}  // namespace

AlgElement::AlgElement(ActionPtr action, Matrix coeffs)
    : action_(std::move(action)), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != action_->set_size() || coeffs_.cols() != action_->group().order())
    throw ActionMismatch("coefficient shape does not match the action");
}

AlgElement AlgElement::zero(ActionPtr action) {
  Matrix c = Matrix::Zero(action->set_size(), action->group().order());
  return AlgElement(std::move(action), std::move(c));
}

AlgElement AlgElement::basis(ActionPtr action, int xi, int g) {
  AlgElement f = zero(std::move(action));
  f.coeffs_(xi, g) = 1.0;
  return f;
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  require_same_action(*this, o);
  return AlgElement(action_, coeffs_ + o.coeffs_);
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  require_same_action(*this, o);
  return AlgElement(action_, coeffs_ - o.coeffs_);
}

AlgElement AlgElement::operator*(Cplx s) const { return AlgElement(action_, coeffs_ * s); }

double AlgElement::max_abs_diff(const AlgElement& o) const {
  require_same_action(*this, o);
  return (coeffs_ - o.coeffs_).cwiseAbs().maxCoeff();
}

AlgElement multiply(const AlgElement& f1, const AlgElement& f2) {
  require_same_action(f1, f2);
  const GAction& a = *f1.action();
  const FiniteGroup& g = a.group();
  const int m = a.set_size(), n = g.order();
  Matrix out = Matrix::Zero(m, n);
  for (int z = 0; z < n; ++z) {
    const int zi = g.inv(z);
    for (int xi = 0; xi < m; ++xi) {
      const Cplx c1 = f1(xi, z);
      if (c1 == Cplx(0)) continue;
      const int xi2 = a.act(zi, xi);
      for (int y = 0; y < n; ++y) out(xi, y) += c1 * f2(xi2, g.mul(zi, y));
    }
  }
  return AlgElement(f1.action(), std::move(out));
}

AlgElement star(const AlgElement& f) {
  const GAction& a = *f.action();
  const FiniteGroup& g = a.group();
  const int m = a.set_size(), n = g.order();
  Matrix out(m, n);
  for (int y = 0; y < n; ++y) {
    const int yi = g.inv(y);
    for (int xi = 0; xi < m; ++xi) out(xi, y) = std::conj(f(a.act(yi, xi), yi));
  }
  return AlgElement(f.action(), std::move(out));
}

AlgElement unit_element(ActionPtr action) {
  AlgElement f = AlgElement::zero(action);
  const int e = action->group().identity();
  for (int xi = 0; xi < action->set_size(); ++xi) f.set(xi, e, 1.0);
  return f;
}

double norm1(const AlgElement& f) {
  double s = 0.0;
  for (Eigen::Index z = 0; z < f.coeffs().cols(); ++z)
    s += f.coeffs().col(z).cwiseAbs().maxCoeff();
  return s;
}

Cplx inner_product(const AlgElement& f1, const AlgElement& f2) {
  require_same_action(f1, f2);
  return (f1.coeffs().cwiseProduct(f2.coeffs().conjugate())).sum();
}

int Orbit::position_of(int xi) const {
  auto it = std::lower_bound(members.begin(), members.end(), xi);
  if (it == members.end() || *it != xi) return -1;
  return static_cast<int>(it - members.begin());
}

std::vector<Orbit> orbits(const ActionPtr& action) {
  const GAction& a = *action;
  const FiniteGroup& g = a.group();
  const int m = a.set_size(), n = g.order();
  std::vector<char> seen(m, 0);
  std::vector<Orbit> out;
  for (int base = 0; base < m; ++base) {
    if (seen[base]) continue;
    Orbit o;
    o.index = static_cast<int>(out.size());
    o.base_point = base;
    std::vector<int> stab_members;
    std::vector<int> carrier(m, -1);  // point -> smallest group element reaching it
    for (int z = 0; z < n; ++z) {
      const int xi = a.act(z, base);
      if (carrier[xi] < 0) carrier[xi] = z;
      if (xi == base) stab_members.push_back(z);
    }
    for (int xi = 0; xi < m; ++xi)
      if (carrier[xi] >= 0) {
        o.members.push_back(xi);
        seen[xi] = 1;
      }
    o.section.resize(o.members.size());
    for (size_t i = 0; i < o.members.size(); ++i)
      o.section[i] = o.members[i] == base ? g.identity() : carrier[o.members[i]];
    o.stabilizer = make_subgroup(g, std::move(stab_members));
    if (o.size() * o.stabilizer.order() != n)
      throw std::logic_error("orbit-stabilizer violated at base point " +
                             std::to_string(base));
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace qd
