#include "qdouble/characters.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace qd {

namespace {

constexpr int kOrderBound = 200;

// Phase as a rational number of turns, kept exact so abelian character
// values are roots of unity with no numeric drift.
struct RationalPhase {
  long long num = 0;
  long long den = 1;

  void normalize() {
    num %= den;
    if (num < 0) num += den;
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  RationalPhase plus(const RationalPhase& o) const {
    RationalPhase r{num * o.den + o.num * den, den * o.den};
    r.normalize();
    return r;
  }
  RationalPhase times(long long k) const {
    RationalPhase r{num * k, den};
    r.normalize();
    return r;
  }
  // one k-th root, shifted by t/k of a turn
  RationalPhase root(long long k, long long t) const {
    RationalPhase r{num + t * den, den * k};
    r.normalize();
    return r;
  }
  Cplx value() const {
    const double turn = 2.0 * std::numbers::pi * static_cast<double>(num) /
                        static_cast<double>(den);
    return {std::cos(turn), std::sin(turn)};
  }
};

// All |G| characters of an abelian group, built by extending along a chain
// {e} < H_1 < ... < G. Each extension step adjoins one generator g with
// g^k in the previous subgroup and picks the k possible roots for chi(g).
std::vector<std::vector<RationalPhase>> abelian_character_phases(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> in_sub(n, -1);  // element -> position in subgroup list
  std::vector<int> sub = {g.identity()};
  in_sub[g.identity()] = 0;
  std::vector<std::vector<RationalPhase>> chars(1);
  chars[0].resize(n);  // indexed by element; only subgroup entries meaningful
  chars[0][g.identity()] = RationalPhase{0, 1};

  for (int gen = 0; gen < n; ++gen) {
    if (in_sub[gen] >= 0) continue;
    // k = least power landing back in the current subgroup
    int k = 1;
    int p = gen;
    while (in_sub[p] < 0) {
      p = g.mul(p, gen);
      ++k;
    }
    const int base = p;  // gen^k, inside the subgroup
    std::vector<int> new_sub;
    std::vector<int> new_in(n, -1);
    std::vector<std::vector<RationalPhase>> new_chars;
    for (const auto& chi : chars) {
      for (long long t = 0; t < k; ++t) {
        const RationalPhase theta = chi[base].root(k, t);
        std::vector<RationalPhase> ext(n);
        int gpow = g.identity();
        for (int j = 0; j < k; ++j) {
          for (int h : sub) {
            const int elem = g.mul(h, gpow);
            ext[elem] = chi[h].plus(theta.times(j));
          }
          gpow = g.mul(gpow, gen);
        }
        new_chars.push_back(std::move(ext));
      }
    }
    int gpow = g.identity();
    for (int j = 0; j < k; ++j) {
      for (int h : sub) {
        const int elem = g.mul(h, gpow);
        if (new_in[elem] < 0) {
          new_in[elem] = static_cast<int>(new_sub.size());
          new_sub.push_back(elem);
        }
      }
      gpow = g.mul(gpow, gen);
    }
    sub = std::move(new_sub);
    in_sub = std::move(new_in);
    chars = std::move(new_chars);
    if (static_cast<int>(sub.size()) == n) break;
  }
  return chars;
}

// Sort key comparison on (degree, then class values with a coarse grid so
// the order is stable against float noise).
bool row_less(int deg_a, const std::vector<Cplx>& a, int deg_b, const std::vector<Cplx>& b) {
  if (deg_a != deg_b) return deg_a < deg_b;
  auto grid = [](double x) { return std::llround(x * 1e6); };
  for (size_t j = 0; j < a.size(); ++j) {
    const auto ra = grid(a[j].real()), rb = grid(b[j].real());
    if (ra != rb) return ra > rb;  // trivial character (all 1) sorts first
    const auto ia = grid(a[j].imag()), ib = grid(b[j].imag());
    if (ia != ib) return ia > ib;
  }
  return false;
}

void sort_table(CharacterTable& t) {
  std::vector<int> perm(t.rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int i, int j) {
    return row_less(t.degrees[i], t.rows[i], t.degrees[j], t.rows[j]);
  });
  std::vector<int> deg;
  std::vector<std::vector<Cplx>> rows;
  for (int p : perm) {
    deg.push_back(t.degrees[p]);
    rows.push_back(std::move(t.rows[p]));
  }
  t.degrees = std::move(deg);
  t.rows = std::move(rows);
}

double orthogonality_defect(const CharacterTable& t, int group_order) {
  double worst = 0.0;
  const int k = t.num_classes();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cplx s = 0;
      for (int c = 0; c < k; ++c)
        s += static_cast<double>(t.classes[c].members.size()) * t.rows[i][c] *
             std::conj(t.rows[j][c]);
      s /= static_cast<double>(group_order);
      worst = std::max(worst, std::abs(s - (i == j ? Cplx(1) : Cplx(0))));
    }
  return worst;
}

CharacterTable burnside_table(const FiniteGroup& g, unsigned seed) {
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const int k = t.num_classes();
  const int n = g.order();
  std::vector<int> class_of(n);
  for (int c = 0; c < k; ++c)
    for (int m : t.classes[c].members) class_of[m] = c;
  int id_class = class_of[g.identity()];

  // class multiplication constants a[i][j][l] = #{(x,y) in C_i x C_j : xy = rep_l}
  std::vector<Eigen::MatrixXd> a(k, Eigen::MatrixXd::Zero(k, k));
  for (int l = 0; l < k; ++l) {
    const int rep = t.classes[l].representative;
    for (int x = 0; x < n; ++x) {
      const int y = g.mul(g.inv(x), rep);
      a[l](class_of[x], class_of[y]) += 1.0;
    }
  }
  // reshuffle into per-i matrices A_i with (A_i)_{j,l} = a[i][j][l]; the
  // central-character vectors are their simultaneous eigenvectors
  std::vector<Eigen::MatrixXd> cm(k, Eigen::MatrixXd(k, k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) cm[i](j, l) = a[l](i, j);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  for (int attempt = 0; attempt < 25; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) m += unif(rng) * cm[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) continue;

    CharacterTable cand;
    cand.classes = t.classes;
    bool ok = true;
    for (int v = 0; v < k && ok; ++v) {
      Vector w = es.eigenvectors().col(v);
      if (std::abs(w(id_class)) < 1e-8) {
        ok = false;
        break;
      }
      w /= w(id_class);  // central characters: omega at identity class is 1
      double s = 0.0;
      for (int c = 0; c < k; ++c)
        s += std::norm(w(c)) / static_cast<double>(t.classes[c].members.size());
      const double d_real = std::sqrt(static_cast<double>(n) / s);
      const int d = static_cast<int>(std::llround(d_real));
      if (d < 1 || std::abs(d_real - d) > 1e-6) {
        ok = false;
        break;
      }
      std::vector<Cplx> row(k);
      for (int c = 0; c < k; ++c)
        row[c] = static_cast<double>(d) * w(c) /
                 static_cast<double>(t.classes[c].members.size());
      cand.degrees.push_back(d);
      cand.rows.push_back(std::move(row));
    }
    if (!ok) continue;
    int sum_sq = 0;
    for (int d : cand.degrees) sum_sq += d * d;
    if (sum_sq != n) continue;
    if (orthogonality_defect(cand, n) > 1e-10) continue;
    sort_table(cand);
    return cand;
  }
  throw ConvergenceFailure("class-matrix eigenvector separation failed for " + g.name());
}

// ---- randomized invariant-subspace splitting --------------------------------

struct RegularRep {
  const FiniteGroup* g;
  // rho(x) e_h = e_{xh}; applied as a row permutation of the basis matrix
  Matrix compress(int x, const Matrix& basis) const {
    const int n = g->order();
    Matrix permuted(n, basis.cols());
    for (int h = 0; h < n; ++h) permuted.row(g->mul(x, h)) = basis.row(h);
    return basis.adjoint() * permuted;
  }
};

std::vector<Cplx> class_character(const FiniteGroup& g, const std::vector<ConjClass>& classes,
                                  const std::vector<Matrix>& mats) {
  std::vector<Cplx> row;
  row.reserve(classes.size());
  for (const auto& c : classes) row.push_back(mats[c.representative].trace());
  return row;
}

double char_norm_sq(const FiniteGroup& g, const std::vector<Matrix>& mats) {
  double s = 0.0;
  for (int x = 0; x < g.order(); ++x) s += std::norm(mats[x].trace());
  return s / g.order();
}

double hom_defect(const FiniteGroup& g, const std::vector<Matrix>& mats, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  double worst = 0.0;
  for (int t = 0; t < 32; ++t) {
    const int x = pick(rng), y = pick(rng);
    worst = std::max(worst,
                     (mats[x] * mats[y] - mats[g.mul(x, y)]).cwiseAbs().maxCoeff());
  }
  for (int x = 0; x < g.order(); ++x) {
    const Eigen::Index d = mats[x].rows();
    worst = std::max(worst, (mats[x] * mats[x].adjoint() - Matrix::Identity(d, d))
                                .cwiseAbs()
                                .maxCoeff());
  }
  return worst;
}

std::vector<GroupIrrep> split_regular(const FiniteGroup& g, const CharacterTable& table,
                                      unsigned seed) {
  const int n = g.order();
  RegularRep reg{&g};
  std::mt19937_64 rng(seed ^ 0xabcdef12345ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  struct Found {
    std::vector<Cplx> row;
    std::vector<Matrix> mats;
    int degree;
  };
  std::vector<Found> found;
  int sum_sq = 0;

  std::vector<Matrix> stack = {Matrix::Identity(n, n)};
  int stall_retries = 0;
  while (!stack.empty() && sum_sq < n) {
    Matrix basis = std::move(stack.back());
    stack.pop_back();
    const int k = static_cast<int>(basis.cols());

    std::vector<Matrix> sub(n);
    for (int x = 0; x < n; ++x) sub[x] = reg.compress(x, basis);

    if (std::abs(char_norm_sq(g, sub) - 1.0) < 1e-6) {
      // irreducible block; keep one copy per character
      auto row = class_character(g, table.classes, sub);
      bool fresh = true;
      for (const auto& f : found) {
        double diff = 0.0;
        for (size_t c = 0; c < row.size(); ++c)
          diff = std::max(diff, std::abs(row[c] - f.row[c]));
        if (diff < 1e-6) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        if (hom_defect(g, sub, rng) >= 1e-12)
          throw SplittingFailure("inaccurate invariant block for " + g.name());
        found.push_back({std::move(row), std::move(sub), k});
        sum_sq += k * k;
      }
      continue;
    }

    // average a random Hermitian over the subrepresentation, split eigenspaces
    Matrix h(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) h(i, j) = Cplx(gauss(rng), gauss(rng));
    h = (h + h.adjoint()).eval();
    Matrix avg = Matrix::Zero(k, k);
    for (int x = 0; x < n; ++x) avg += sub[x] * h * sub[x].adjoint();
    avg /= static_cast<double>(n);
    avg = ((avg + avg.adjoint()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Matrix> es(avg);
    const auto& ev = es.eigenvalues();
    const double spread = std::max(1e-30, ev(k - 1) - ev(0));
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= k; ++i) {
      if (i == k || ev(i) - ev(i - 1) > 1e-8 * spread) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }
    if (clusters.size() <= 1) {
      // averaged operator came out scalar on a reducible block: new draw
      if (++stall_retries > 8)
        throw SplittingFailure("random splitting stalled for " + g.name());
      stack.push_back(std::move(basis));
      continue;
    }
    for (const auto& [b, e] : clusters)
      stack.push_back(basis * es.eigenvectors().middleCols(b, e - b));
  }

  if (sum_sq != n)
    throw SplittingFailure("regular representation split incomplete for " + g.name());

  // match against the table rows and emit in table order
  std::vector<GroupIrrep> out(found.size());
  std::vector<char> used(found.size(), 0);
  for (int r = 0; r < table.num_classes(); ++r) {
    int hit = -1;
    for (size_t f = 0; f < found.size(); ++f) {
      if (used[f]) continue;
      double diff = 0.0;
      for (int c = 0; c < table.num_classes(); ++c)
        diff = std::max(diff, std::abs(found[f].row[c] - table.rows[r][c]));
      if (diff < 1e-6) {
        hit = static_cast<int>(f);
        break;
      }
    }
    if (hit < 0)
      throw SplittingFailure("no invariant block matches character row " +
                             std::to_string(r) + " of " + g.name());
    used[hit] = 1;
    out[r].degree = found[hit].degree;
    out[r].label = r;
    out[r].matrices = std::move(found[hit].mats);
  }
  return out;
}

}  // namespace

int CharacterTable::class_of(int elem) const {
  for (int c = 0; c < num_classes(); ++c)
    if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), elem))
      return c;
  return -1;
}

CharacterTable character_table(const FiniteGroup& g, unsigned seed) {
  if (g.order() > kOrderBound)
    throw UnsupportedParams("character table supported up to order " +
                            std::to_string(kOrderBound));
  if (!g.is_abelian()) return burnside_table(g, seed);

  CharacterTable t;
  t.classes = conjugacy_classes(g);
  const auto phases = abelian_character_phases(g);
  for (const auto& chi : phases) {
    std::vector<Cplx> row;
    row.reserve(t.classes.size());
    for (const auto& c : t.classes) row.push_back(chi[c.representative].value());
    t.rows.push_back(std::move(row));
    t.degrees.push_back(1);
  }
  sort_table(t);
  return t;
}

std::vector<GroupIrrep> irreps(const FiniteGroup& g, unsigned seed) {
  const CharacterTable table = character_table(g, seed);
  if (g.is_abelian()) {
    std::vector<GroupIrrep> out(table.rows.size());
    for (size_t r = 0; r < table.rows.size(); ++r) {
      out[r].degree = 1;
      out[r].label = static_cast<int>(r);
      out[r].matrices.resize(g.order());
      for (int c = 0; c < table.num_classes(); ++c)
        for (int m : table.classes[c].members) {
          out[r].matrices[m] = Matrix::Constant(1, 1, table.rows[r][c]);
        }
    }
    return out;
  }
  // a few independent attempts before giving up; each failure reseeds
  for (unsigned attempt = 0; attempt < 4; ++attempt) {
    try {
      return split_regular(g, table, seed + 1000 * attempt);
    } catch (const SplittingFailure&) {
      if (attempt == 3) throw;
    }
  }
  throw SplittingFailure("unreachable");
}

std::vector<GroupIrrep> irreps(const Subgroup& h, unsigned seed) {
  return irreps(h.local, seed);
}

}  // namespace qd
