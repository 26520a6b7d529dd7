#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "linedyn/arrangements.hpp"

namespace linedyn {

// Bijection of {1..m} in one-line notation: image(i) for i = 1..m.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int m);
  // Cycles in 1-based notation, e.g. {{1,7,4,3,6,5,2},{8,14,11,10,13,12,9}}.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
  // Parses "(1,7,4)(8,14,11)".
  static Permutation parse_cycles(int m, const std::string& text);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i - 1); }
  const std::vector<int>& one_line() const { return img_; }

  // (a*b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  int order() const;
  bool is_identity() const;
  std::string cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// Rank-3 matroid recorded by its 3-element non-bases.
class Rank3Matroid {
 public:
  using Triple = std::array<int, 3>;

  Rank3Matroid() = default;
  Rank3Matroid(int ground, const std::vector<Triple>& nonbases);

  int ground() const { return m_; }
  const std::vector<Triple>& nonbases() const { return sorted_; }
  std::size_t nonbasis_count() const { return sorted_.size(); }
  bool is_nonbasis(int i, int j, int k) const;
  bool is_basis(int i, int j, int k) const { return !is_nonbasis(i, j, k); }

  friend bool operator==(const Rank3Matroid& a, const Rank3Matroid& b) { return a.m_ == b.m_ && a.sorted_ == b.sorted_; }
  friend bool operator!=(const Rank3Matroid& a, const Rank3Matroid& b) { return !(a == b); }

  // Non-bases of a not in b.
  std::vector<Triple> difference(const Rank3Matroid& b) const;
  Rank3Matroid relabeled(const Permutation& s) const;
  std::string to_string() const;

 private:
  static std::uint32_t key(int i, int j, int k);
  int m_ = 0;
  std::vector<Triple> sorted_;
  std::unordered_set<std::uint32_t> set_;
};

// Non-bases: triples of lines whose normals are linearly dependent.
template <class S>
Rank3Matroid matroid_from_arrangement(const LabeledArrangement<S>& c) {
  std::vector<Rank3Matroid::Triple> nb;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec3<S> x = cross(c[i].normal(), c[j].normal());
      for (int k = j + 1; k < n; ++k)
        if (vanishes(dot(x, c[k].normal()))) nb.push_back({i + 1, j + 1, k + 1});
    }
  return Rank3Matroid(n, nb);
}

// Heptagon-and-mirrors matroid indexed as realized by the parametrized family
// C0(x) u C1(x): atom i sits at heptagon position POS[i], and {a, b, c'} is a
// non-basis iff POS[a] + POS[b] = 2 POS[c] (mod 7).
Rank3Matroid matroid_M7();
// The same matroid with atoms in heptagon order: {a, b, c'} with a + b = 2c.
Rank3Matroid matroid_M7_heptagon();
// Heptagon position of each family label (1-based, index 0 unused).
const std::array<int, 8>& heptagon_position();
Rank3Matroid matroid_M8();

bool is_automorphism(const Rank3Matroid& m, const Permutation& s);

struct PermutationGroup {
  std::vector<Permutation> elements;  // sorted
  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

// Breadth-first closure under multiplication by generators.
PermutationGroup group_closure(const std::vector<Permutation>& gens, std::size_t limit = 100000);

// Named permutations.
Permutation sigma1();
Permutation sigma2();
Permutation sigma0();
std::array<Permutation, 3> m8_involutions();
Permutation m8_commuting_involution();

}  // namespace linedyn
