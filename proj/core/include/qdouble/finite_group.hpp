#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qd {

// Construction-time validation failures. Each message names the offending
// triple or element.
struct NonAssociative : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoIdentity : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoInverse : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite group of order n given by its Cayley table. Immutable after
// construction; all operations on it are pure.
//
// Associativity is checked for all triples when n <= 64 and spot-checked
// on random triples above that.
class FiniteGroup {
 public:
  // Validates the table, locates the identity and derives the inverse table.
  // Throws NoIdentity / NoInverse / NonAssociative.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string name = "");

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int g, int h) const { return cayley_[static_cast<size_t>(g) * n_ + h]; }
  int inv(int g) const { return inverse_[g]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  const std::string& name() const { return name_; }
  const std::vector<int>& cayley_flat() const { return cayley_; }
  std::vector<std::vector<int>> cayley_rows() const;

  // Order of the cyclic subgroup generated by g.
  int element_order(int g) const;

  bool is_abelian() const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> cayley_;   // n*n, row-major: cayley_[g*n + h] = g*h
  std::vector<int> inverse_;  // length n
  std::string name_;
};

// A subgroup of a parent group. Self-contained: carries the member list
// (parent indices, ascending) and the induced local group, so lifetimes of
// parent and subgroup are independent.
struct Subgroup {
  std::vector<int> members;        // parent element indices, sorted ascending
  FiniteGroup local;               // induced Cayley table on local indices
  std::vector<int> parent_to_local;  // parent index -> local index, -1 outside

  int order() const { return static_cast<int>(members.size()); }
  int to_parent(int local_idx) const { return members[local_idx]; }
  int to_local(int parent_idx) const { return parent_to_local[parent_idx]; }
  bool contains(int parent_idx) const { return parent_to_local[parent_idx] >= 0; }
};

// Throws UnsupportedParams if `members` is not closed / misses the identity.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> members,
                       std::string name = "");

struct ConjClass {
  int representative = 0;          // smallest element index in the class
  std::vector<int> members;        // ascending
};

// Partition into conjugacy classes, sorted by representative.
std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);

// All h with hg = gh, as a Subgroup. Asserts |class(g)|*|centralizer(g)| = |G|.
Subgroup centralizer(const FiniteGroup& g, int elem);

// One representative per left coset xH, in the order the cosets are first
// met when scanning element indices upward; the coset H itself is always
// represented by the identity, every other coset by its smallest member.
std::vector<int> left_coset_section(const FiniteGroup& g, const Subgroup& h);

// Canonical element orderings (documented per family):
//   cyclic(n):    k |-> k, product (i+j) mod n
//   dihedral(n):  order 2n; indices 0..n-1 are rotations r^k, n+k is s*r^k
//                 with s^2 = e and s r s = r^-1
//   symmetric(n): permutations of {0..n-1} in lexicographic order,
//                 (sigma*tau)(i) = sigma(tau(i)); n <= 6
//   quaternion8:  1, -1, i, -i, j, -j, k, -k
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);
FiniteGroup symmetric_group(int n);
FiniteGroup quaternion8();
// Index (a, b) |-> a*|B| + b, componentwise product.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Parses "trivial", "Z<n>", "D<n>" (order 2n), "S<n>", "Q8", and products
// joined by 'x' such as "Z2xZ4". Throws UnsupportedParams on anything else.
FiniteGroup builtin_group(const std::string& name);

}  // namespace qd
