#include "qdouble/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace qd {

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw UnsupportedParams("empty Cayley table");
  FiniteGroup g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.cayley_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw UnsupportedParams("Cayley table is not square at row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      const int v = table[i][j];
      if (v < 0 || v >= n)
        throw UnsupportedParams("Cayley entry out of range at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      g.cayley_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  // identity: a row and column that both act as the identity map
  g.identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0) throw NoIdentity("no two-sided identity element");

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0)
      throw NoInverse("element " + std::to_string(a) + " has no two-sided inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw NonAssociative("associativity fails at triple (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  return g;
}

std::vector<std::vector<int>> FiniteGroup::cayley_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members,
                       std::string name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const int m = static_cast<int>(members.size());
  Subgroup h;
  h.parent_to_local.assign(g.order(), -1);
  for (int i = 0; i < m; ++i) {
    if (members[i] < 0 || members[i] >= g.order())
      throw UnsupportedParams("subgroup member out of range");
    h.parent_to_local[members[i]] = i;
  }
  if (h.parent_to_local[g.identity()] < 0)
    throw UnsupportedParams("subgroup does not contain the identity");

  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    if (h.parent_to_local[g.inv(members[i])] < 0)
      throw UnsupportedParams("subgroup not closed under inverse at element " +
                              std::to_string(members[i]));
    for (int j = 0; j < m; ++j) {
      const int p = g.mul(members[i], members[j]);
      const int loc = h.parent_to_local[p];
      if (loc < 0)
        throw UnsupportedParams("subgroup not closed under product at (" +
                                std::to_string(members[i]) + "," +
                                std::to_string(members[j]) + ")");
      table[i][j] = loc;
    }
  }
  h.members = std::move(members);
  h.local = FiniteGroup::from_cayley_table(table, std::move(name));
  return h;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<ConjClass> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjClass c;
    c.representative = x;
    for (int h = 0; h < n; ++h) {
      const int y = g.conj(h, x);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;  // reps ascending since the scan is ascending
}

Subgroup centralizer(const FiniteGroup& g, int elem) {
  std::vector<int> members;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, elem) == g.mul(elem, h)) members.push_back(h);
  Subgroup z = make_subgroup(g, std::move(members));

  int class_size = 0;  // orbit-stabilizer sanity check
  std::vector<char> seen(g.order(), 0);
  for (int h = 0; h < g.order(); ++h) {
    const int y = g.conj(h, elem);
    if (!seen[y]) {
      seen[y] = 1;
      ++class_size;
    }
  }
  if (class_size * z.order() != g.order())
    throw std::logic_error("orbit-stabilizer violated for element " + std::to_string(elem));
  return z;
}

std::vector<int> left_coset_section(const FiniteGroup& g, const Subgroup& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  // mark the coset of the identity first so it is represented by e itself
  for (int m : h.members) seen[m] = 1;
  reps.push_back(g.identity());
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int m : h.members) seen[g.mul(x, m)] = 1;
  }
  return reps;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw UnsupportedParams("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_cayley_table(t, "Z" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw UnsupportedParams("dihedral parameter must be >= 1");
  const int N = 2 * n;
  auto idx = [n](int eps, int k) { return eps * n + ((k % n) + n) % n; };
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          // (s^e1 r^k1)(s^e2 r^k2) = s^(e1+e2) r^(k2 + (-1)^e2 k1)... with the
          // convention index eps*n+k  <->  s^eps r^k
          const int eps = (e1 + e2) % 2;
          const int k = e2 == 0 ? k1 + k2 : k2 - k1;
          t[idx(e1, k1)][idx(e2, k2)] = idx(eps, k);
        }
  return FiniteGroup::from_cayley_table(t, "D" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw UnsupportedParams("symmetric group supported for 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int N = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<int> comp(n);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
      t[i][j] = index[comp];
    }
  return FiniteGroup::from_cayley_table(t, "S" + std::to_string(n));
}

FiniteGroup quaternion8() {
  // elements (sign s, unit u) with u in {1,i,j,k}, index 2*u + (s<0)
  // layout: 1,-1,i,-i,j,-j,k,-k
  auto mul_units = [](int u, int v, int& sign) -> int {
    // unit table for {1,i,j,k}; sign collects the -1 factors
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign = sgn[u][v];
    return prod[u][v];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2 ? -1 : 1;
      const int ub = b / 2, sb = b % 2 ? -1 : 1;
      int s;
      const int u = mul_units(ua, ub, s);
      s *= sa * sb;
      t[a][b] = 2 * u + (s < 0 ? 1 : 0);
    }
  return FiniteGroup::from_cayley_table(t, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int N = na * nb;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[a1 * nb + b1][a2 * nb + b2] = a.mul(a1, a2) * nb + b.mul(b1, b2);
  return FiniteGroup::from_cayley_table(t, a.name() + "x" + b.name());
}

namespace {

FiniteGroup builtin_single(const std::string& name) {
  if (name == "trivial") return cyclic_group(1);
  if (name == "Q8") return quaternion8();
  if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S')) {
    int n = 0;
    try {
      size_t pos = 0;
      n = std::stoi(name.substr(1), &pos);
      if (pos != name.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UnsupportedParams("cannot parse group name '" + name + "'");
    }
    if (name[0] == 'Z') return cyclic_group(n);
    if (name[0] == 'D') return dihedral_group(n);
    return symmetric_group(n);
  }
  throw UnsupportedParams("unknown group name '" + name + "'");
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  size_t x = name.find('x');
  if (x == std::string::npos) return builtin_single(name);
  FiniteGroup g = builtin_single(name.substr(0, x));
  std::string rest = name.substr(x + 1);
  while (true) {
    x = rest.find('x');
    if (x == std::string::npos) return direct_product(g, builtin_single(rest));
    g = direct_product(g, builtin_single(rest.substr(0, x)));
    rest = rest.substr(x + 1);
  }
}

}  // namespace qd
