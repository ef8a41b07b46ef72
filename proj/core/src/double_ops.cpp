#include "qdouble/double_ops.hpp"

#include <random>
#include <unordered_map>

namespace qd {

namespace {
constexpr double kTol = 1e-12;
constexpr int kExhaustiveBound = 8;
}  // namespace

TensorElement::TensorElement(const FiniteGroup& g, int rank) : group_(g), rank_(rank) {
  if (rank != 1 && rank != 2 && rank != 3) throw RankMismatch("rank must be 1, 2 or 3");
  if (g.order() > 255) throw UnsupportedParams("tensor elements support order <= 255");
}

std::uint64_t TensorElement::pack(const std::vector<int>& idx) const {
  std::uint64_t key = 0;
  for (int v : idx) key = (key << 8) | static_cast<std::uint64_t>(v);
  return key;
}

std::vector<int> TensorElement::unpack(std::uint64_t key) const {
  std::vector<int> idx(2 * rank_);
  for (int i = 2 * rank_ - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(key & 0xff);
    key >>= 8;
  }
  return idx;
}

Cplx TensorElement::at(const std::vector<int>& idx) const {
  auto it = coeffs_.find(pack(idx));
  return it == coeffs_.end() ? Cplx(0) : it->second;
}

void TensorElement::add(const std::vector<int>& idx, Cplx v) {
  if (v == Cplx(0)) return;
  coeffs_[pack(idx)] += v;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  if (rank_ != o.rank_) throw RankMismatch("tensor ranks differ");
  TensorElement out = *this;
  for (const auto& [k, v] : o.coeffs_) out.coeffs_[k] -= v;
  return out;
}

double TensorElement::max_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

double TensorElement::max_abs_diff(const TensorElement& o) const {
  return (*this - o).max_abs();
}

void TensorElement::prune(double eps) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = std::abs(it->second) <= eps ? coeffs_.erase(it) : std::next(it);
}

TensorElement TensorElement::simple(const DoubleElement& f1, const DoubleElement& f2) {
  const FiniteGroup& g = f1.action()->group();
  TensorElement t(g, 2);
  const int n = g.order();
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < n; ++b1) {
      const Cplx v1 = f1(a1, b1);
      if (v1 == Cplx(0)) continue;
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) t.add({a1, b1, a2, b2}, v1 * f2(a2, b2));
    }
  return t;
}

TensorElement TensorElement::unit(const FiniteGroup& g, int rank) {
  TensorElement t(g, rank);
  const int n = g.order();
  const int e = g.identity();
  std::vector<int> idx(2 * rank);
  std::vector<int> a(rank, 0);
  while (true) {
    for (int s = 0; s < rank; ++s) {
      idx[2 * s] = a[s];
      idx[2 * s + 1] = e;
    }
    t.add(idx, 1.0);
    int s = rank - 1;
    while (s >= 0 && ++a[s] == n) a[s--] = 0;
    if (s < 0) break;
  }
  return t;
}

TensorElement TensorElement::flip() const {
  if (rank_ != 2) throw RankMismatch("flip defined for rank 2");
  TensorElement out(group_, 2);
  for (const auto& [k, v] : coeffs_) {
    auto idx = unpack(k);
    out.add({idx[2], idx[3], idx[0], idx[1]}, v);
  }
  return out;
}

TensorElement coproduct(const DoubleElement& f) {
  const FiniteGroup& g = f.action()->group();
  TensorElement t(g, 2);
  const int n = g.order();
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      const int prod = g.mul(a1, a2);
      for (int b = 0; b < n; ++b) {
        const Cplx v = f(prod, b);
        if (v != Cplx(0)) t.add({a1, b, a2, b}, v);
      }
    }
  return t;
}

DoubleElement antipode(const DoubleElement& f) {
  const GAction& act = *f.action();
  const FiniteGroup& g = act.group();
  const int n = g.order();
  DoubleElement out = AlgElement::zero(f.action());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int bi = g.inv(b);
      out.set(a, b, f(g.conj(bi, g.inv(a)), bi));
    }
  return out;
}

Cplx counit(const DoubleElement& f) {
  const FiniteGroup& g = f.action()->group();
  Cplx s = 0;
  for (int b = 0; b < g.order(); ++b) s += f(g.identity(), b);
  return s;
}

TensorElement r_matrix(const FiniteGroup& g) {
  TensorElement t(g, 2);
  const int n = g.order();
  const int e = g.identity();
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) t.add({a1, e, a2, a1}, 1.0);
  return t;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) {
  if (a.rank() != b.rank()) throw RankMismatch("tensor ranks differ");
  const FiniteGroup& g = a.group();
  const int r = a.rank();

  // bucket b by its point tuple (the a-slots of its key)
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, Cplx>>> buckets;
  for (const auto& [k, v] : b.entries()) {
    const auto idx = b.unpack(k);
    std::uint64_t pts = 0, grp = 0;
    for (int s = 0; s < r; ++s) {
      pts = (pts << 8) | static_cast<std::uint64_t>(idx[2 * s]);
      grp = (grp << 8) | static_cast<std::uint64_t>(idx[2 * s + 1]);
    }
    buckets[pts].emplace_back(grp, v);
  }

  TensorElement out(g, r);
  std::vector<int> key(2 * r);
  for (const auto& [ka, va] : a.entries()) {
    const auto idx = a.unpack(ka);
    std::uint64_t pts = 0;
    for (int s = 0; s < r; ++s) {
      const int z = idx[2 * s + 1];
      pts = (pts << 8) | static_cast<std::uint64_t>(g.conj(g.inv(z), idx[2 * s]));
    }
    auto it = buckets.find(pts);
    if (it == buckets.end()) continue;
    for (const auto& [grp, vb] : it->second) {
      std::uint64_t gk = grp;
      for (int s = r - 1; s >= 0; --s) {
        const int v_s = static_cast<int>((gk >> (8 * (r - 1 - s))) & 0xff);
        key[2 * s] = idx[2 * s];
        key[2 * s + 1] = g.mul(idx[2 * s + 1], v_s);
      }
      out.add(key, va * vb);
    }
  }
  out.prune();
  return out;
}

TensorElement embed(const TensorElement& a, int slots) {
  if (a.rank() != 2) throw RankMismatch("embed expects a rank-2 tensor");
  const FiniteGroup& g = a.group();
  const int n = g.order();
  const int e = g.identity();
  TensorElement out(g, 3);
  for (const auto& [k, v] : a.entries()) {
    const auto idx = a.unpack(k);
    for (int c = 0; c < n; ++c) {
      switch (slots) {
        case 12:
          out.add({idx[0], idx[1], idx[2], idx[3], c, e}, v);
          break;
        case 13:
          out.add({idx[0], idx[1], c, e, idx[2], idx[3]}, v);
          break;
        case 23:
          out.add({c, e, idx[0], idx[1], idx[2], idx[3]}, v);
          break;
        default:
          throw RankMismatch("slots must be 12, 13 or 23");
      }
    }
  }
  return out;
}

DoubleElement tensor_contract_product(const TensorElement& t, const ActionPtr& conj_action) {
  const FiniteGroup& g = t.group();
  DoubleElement out = AlgElement::zero(conj_action);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    // (d_a1 (x) d_b1) * (d_a2 (x) d_b2) = [a1 = b1 a2 b1^-1] d_a1 (x) d_b1b2
    if (idx[0] != g.conj(idx[1], idx[2])) continue;
    const int y = g.mul(idx[1], idx[3]);
    out.set(idx[0], y, out(idx[0], y) + v);
  }
  return out;
}

TensorElement coproduct_leg1(const TensorElement& t) {
  if (t.rank() != 2) throw RankMismatch("coproduct_leg1 expects rank 2");
  const FiniteGroup& g = t.group();
  const int n = g.order();
  TensorElement out(g, 3);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    for (int a1 = 0; a1 < n; ++a1) {
      const int a2 = g.mul(g.inv(a1), idx[0]);
      out.add({a1, idx[1], a2, idx[1], idx[2], idx[3]}, v);
    }
  }
  return out;
}

TensorElement coproduct_leg2(const TensorElement& t) {
  if (t.rank() != 2) throw RankMismatch("coproduct_leg2 expects rank 2");
  const FiniteGroup& g = t.group();
  const int n = g.order();
  TensorElement out(g, 3);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    for (int a1 = 0; a1 < n; ++a1) {
      const int a2 = g.mul(g.inv(a1), idx[2]);
      out.add({idx[0], idx[1], a1, idx[3], a2, idx[3]}, v);
    }
  }
  return out;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

DoubleElement random_element(const ActionPtr& action, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix c(action->set_size(), action->group().order());
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) = Cplx(unif(rng), unif(rng));
  return AlgElement(action, std::move(c));
}

// (eps (x) id) T and (id (x) eps) T as elements of D(G)
DoubleElement counit_leg1(const TensorElement& t, const ActionPtr& action) {
  const FiniteGroup& g = t.group();
  DoubleElement out = AlgElement::zero(action);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    if (idx[0] != g.identity()) continue;
    out.set(idx[2], idx[3], out(idx[2], idx[3]) + v);
  }
  return out;
}

DoubleElement counit_leg2(const TensorElement& t, const ActionPtr& action) {
  const FiniteGroup& g = t.group();
  DoubleElement out = AlgElement::zero(action);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    if (idx[2] != g.identity()) continue;
    out.set(idx[0], idx[1], out(idx[0], idx[1]) + v);
  }
  return out;
}

// S (or a corrupted stand-in) applied to one leg of a rank-2 tensor
TensorElement antipode_leg(const TensorElement& t, int leg, bool corrupt) {
  const FiniteGroup& g = t.group();
  TensorElement out(g, 2);
  for (const auto& [k, v] : t.entries()) {
    auto idx = t.unpack(k);
    const int a = idx[2 * leg], b = idx[2 * leg + 1];
    const int bi = g.inv(b);
    // honest: (S F)(a', b') has F(b'^-1 a'^-1 b', b'^-1); as a pushforward of
    // the delta at (a, b) this lands at (b^-1 a^-1 b, b^-1). The corrupted
    // version drops the inverse on a.
    idx[2 * leg] = corrupt ? g.conj(bi, a) : g.conj(bi, g.inv(a));
    idx[2 * leg + 1] = bi;
    out.add(idx, v);
  }
  return out;
}

TensorElement star_leg_both(const TensorElement& t) {
  const FiniteGroup& g = t.group();
  TensorElement out(g, 2);
  for (const auto& [k, v] : t.entries()) {
    const auto idx = t.unpack(k);
    // star of a basis element delta_a (x) delta_b is delta at (b^-1 a b, b^-1)
    // with coefficient conjugated; apply on both legs
    const int b1 = g.inv(idx[1]), b2 = g.inv(idx[3]);
    out.add({g.conj(b1, idx[0]), b1, g.conj(b2, idx[2]), b2}, std::conj(v));
  }
  return out;
}

void push_check(Report& rep, const std::string& id, double dev, double tol = kTol) {
  rep.checks.push_back({id, dev, dev <= tol});
}

}  // namespace

Report verify_hopf(const FiniteGroup& g, unsigned seed, NegativeControl control) {
  Report rep{"hopf", g.name(), {}};
  const ActionPtr action = conjugation_action(g);
  const int n = g.order();
  const bool corrupt = control == NegativeControl::CorruptAntipode;
  std::mt19937_64 rng(seed);

  std::vector<DoubleElement> samples;
  if (n <= kExhaustiveBound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) samples.push_back(AlgElement::basis(action, a, b));
  } else {
    for (int t = 0; t < 12; ++t) samples.push_back(random_element(action, rng));
  }
  const DoubleElement one = unit_element(action);

  double coassoc = 0, counit_l = 0, counit_r = 0, antipode_l = 0, antipode_r = 0;
  double delta_mult = 0, delta_star = 0, eps_mult = 0, eps_star = 0;
  for (const auto& f : samples) {
    const TensorElement df = coproduct(f);
    coassoc = std::max(coassoc, coproduct_leg1(df).max_abs_diff(coproduct_leg2(df)));
    counit_l = std::max(counit_l, counit_leg1(df, action).max_abs_diff(f));
    counit_r = std::max(counit_r, counit_leg2(df, action).max_abs_diff(f));

    const Cplx eps = counit(f);
    antipode_l = std::max(
        antipode_l, tensor_contract_product(antipode_leg(df, 0, corrupt), action)
                        .max_abs_diff(one * eps));
    antipode_r = std::max(
        antipode_r, tensor_contract_product(antipode_leg(df, 1, corrupt), action)
                        .max_abs_diff(one * eps));

    delta_star = std::max(delta_star,
                          coproduct(star(f)).max_abs_diff(star_leg_both(df)));
    eps_star = std::max(eps_star, std::abs(counit(star(f)) - std::conj(eps)));
  }
  // multiplicativity on all sample pairs
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = 0; j < samples.size(); ++j)
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  for (const auto& [i, j] : pairs) {
    const DoubleElement prod = multiply(samples[i], samples[j]);
    delta_mult = std::max(
        delta_mult, coproduct(prod).max_abs_diff(tensor_multiply(
                        coproduct(samples[i]), coproduct(samples[j]))));
    eps_mult = std::max(eps_mult,
                        std::abs(counit(prod) - counit(samples[i]) * counit(samples[j])));
  }

  push_check(rep, "coassociativity", coassoc);
  push_check(rep, "counit-left", counit_l);
  push_check(rep, "counit-right", counit_r);
  push_check(rep, "antipode-left", antipode_l);
  push_check(rep, "antipode-right", antipode_r);
  push_check(rep, "coproduct-multiplicative", delta_mult);
  push_check(rep, "coproduct-star", delta_star);
  push_check(rep, "counit-multiplicative", eps_mult);
  push_check(rep, "counit-star", eps_star);
  return rep;
}

Report verify_quasitriangular(const FiniteGroup& g, unsigned seed, NegativeControl control) {
  Report rep{"quasitriangular", g.name(), {}};
  const ActionPtr action = conjugation_action(g);
  const int n = g.order();
  std::mt19937_64 rng(seed);

  TensorElement r = r_matrix(g);
  if (control == NegativeControl::FlipR) r = r.flip();

  double integral = 0.0;  // R entries are 0/1 on the nose
  for (const auto& [k, v] : r.entries())
    integral = std::max(integral, std::abs(v - std::round(v.real())));
  push_check(rep, "r-integer-entries", integral);

  std::vector<DoubleElement> samples;
  if (n <= kExhaustiveBound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) samples.push_back(AlgElement::basis(action, a, b));
  } else {
    for (int t = 0; t < 12; ++t) samples.push_back(random_element(action, rng));
  }
  double rdelta = 0.0;
  for (const auto& f : samples) {
    const TensorElement lhs = tensor_multiply(r, coproduct(f));
    const TensorElement rhs = tensor_multiply(coproduct(f).flip(), r);
    rdelta = std::max(rdelta, lhs.max_abs_diff(rhs));
  }
  push_check(rep, "r-delta-deltaop", rdelta);

  const TensorElement r13 = embed(r, 13);
  push_check(rep, "coproduct-leg1-r",
             coproduct_leg1(r).max_abs_diff(tensor_multiply(r13, embed(r, 23))));
  push_check(rep, "coproduct-leg2-r",
             coproduct_leg2(r).max_abs_diff(tensor_multiply(r13, embed(r, 12))));

  const TensorElement r12 = embed(r, 12);
  const TensorElement r23 = embed(r, 23);
  const TensorElement yb_l = tensor_multiply(tensor_multiply(r12, r13), r23);
  const TensorElement yb_r = tensor_multiply(tensor_multiply(r23, r13), r12);
  push_check(rep, "yang-baxter", yb_l.max_abs_diff(yb_r));

  const TensorElement r_inv = antipode_leg(r, 0, false);  // (S (x) id) R
  push_check(rep, "r-invertible",
             tensor_multiply(r, r_inv).max_abs_diff(TensorElement::unit(g, 2)));
  return rep;
}

Report verify_star(const FiniteGroup& g, unsigned seed) {
  Report rep{"star", g.name(), {}};
  const ActionPtr action = conjugation_action(g);
  const int n = g.order();
  std::mt19937_64 rng(seed);

  double basis_law = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const DoubleElement s = star(AlgElement::basis(action, a, b));
      DoubleElement expect = AlgElement::basis(action, g.conj(g.inv(b), a), g.inv(b));
      basis_law = std::max(basis_law, s.max_abs_diff(expect));
    }
  push_check(rep, "star-basis-law", basis_law);

  double invol = 0.0, antihom = 0.0;
  for (int t = 0; t < 100; ++t) {
    const DoubleElement f1 = random_element(action, rng);
    const DoubleElement f2 = random_element(action, rng);
    invol = std::max(invol, star(star(f1)).max_abs_diff(f1));
    antihom = std::max(antihom, star(multiply(f1, f2))
                                    .max_abs_diff(multiply(star(f2), star(f1))));
  }
  push_check(rep, "star-involution", invol);
  push_check(rep, "star-antihomomorphism", antihom);
  return rep;
}

std::vector<DoubleIrrep> double_irreps(const FiniteGroup& g, unsigned seed) {
  const ActionPtr action = conjugation_action(g);
  std::vector<DoubleIrrep> out;
  for (auto& rep : all_irreps(action, seed)) {
    DoubleIrrep d;
    d.class_representative = rep.orbit().base_point;
    d.alpha_label = rep.alpha().label;
    d.rep = std::move(rep);
    out.push_back(std::move(d));
  }
  return out;
}

Matrix character(const DoubleIrrep& rep) {
  const ActionPtr& action = rep.rep.action();
  const int n = action->group().order();
  Matrix chi = Matrix::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto b = rep.rep.block_of(x, y);
      if (b.row >= 0 && b.row == b.col) chi(x, y) = b.alpha_block->trace();
    }
  return chi;
}

std::vector<int> tensor_decompose(const DoubleIrrep& rep1, const DoubleIrrep& rep2,
                                  const std::vector<DoubleIrrep>& all,
                                  double residual_tol) {
  const FiniteGroup& g = rep1.rep.action()->group();
  if (!same_action(rep1.rep.action(), rep2.rep.action()))
    throw ActionMismatch("tensor factors live over different groups");
  const int n = g.order();

  // character of (rep1 (x) rep2) o Delta:
  //   chi12(xi, y) = sum_{a1 a2 = xi} chi1(a1, y) chi2(a2, y)
  const Matrix chi1 = character(rep1);
  const Matrix chi2 = character(rep2);
  Matrix chi12 = Matrix::Zero(n, n);
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2) {
      const int xi = g.mul(a1, a2);
      for (int y = 0; y < n; ++y) chi12(xi, y) += chi1(a1, y) * chi2(a2, y);
    }

  // solve chi12 = sum_k m_k chi_k in least squares; irreducible characters of
  // a semisimple algebra are linearly independent, so the solution is unique
  const int k = static_cast<int>(all.size());
  Matrix a(n * n, k);
  for (int c = 0; c < k; ++c) {
    const Matrix chik = character(all[c]);
    a.col(c) = Eigen::Map<const Vector>(chik.data(), n * n);
  }
  const Vector rhs = Eigen::Map<const Vector>(chi12.data(), n * n);
  const Vector sol = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);

  std::vector<int> mult(k);
  long long dims = 0;
  for (int c = 0; c < k; ++c) {
    const double re = sol(c).real();
    const int m = static_cast<int>(std::llround(re));
    if (std::abs(sol(c) - Cplx(m)) > residual_tol || m < 0)
      throw DecompositionResidual("multiplicity " + std::to_string(c) +
                                  " is not a nonnegative integer");
    mult[c] = m;
    dims += static_cast<long long>(m) * all[c].rep.dim();
  }
  if ((a * sol - rhs).cwiseAbs().maxCoeff() > residual_tol)
    throw DecompositionResidual("character system residual too large");
  if (dims != static_cast<long long>(rep1.rep.dim()) * rep2.rep.dim())
    throw DecompositionResidual("dimension bookkeeping failed");
  return mult;
}

}  // namespace qd
