#include "linedyn/matroids.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace linedyn {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v]) throw ParseError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i + 1;
  std::vector<bool> used(m + 1, false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 1 || a > m || used[a]) throw ParseError("bad cycle entry " + std::to_string(a));
      used[a] = true;
      v[a - 1] = b;
    }
  return Permutation(std::move(v));
}

Permutation Permutation::parse_cycles(int m, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  std::string num;
  bool open = false;
  auto flush = [&] {
    if (!num.empty()) {
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char ch : text) {
    if (ch == '(') {
      if (open) throw ParseError("nested '(' in cycle notation");
      open = true;
    } else if (ch == ')') {
      flush();
      if (!open) throw ParseError("unbalanced ')' in cycle notation");
      cycles.push_back(cur);
      cur.clear();
      open = false;
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      num += ch;
    } else {
      throw ParseError(std::string("unexpected '") + ch + "' in cycle notation");
    }
  }
  if (open) throw ParseError("unterminated cycle");
  return from_cycles(m, cycles);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw FieldMismatch("permutations of different degree");
  std::vector<int> v(a.size());
  for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= size(); ++i) v[(*this)(i)-1] = i;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

int Permutation::order() const {
  Permutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::string Permutation::cycle_string() const {
  std::vector<bool> seen(img_.size() + 1, false);
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i] || (*this)(i) == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : ",") + std::to_string(j);
      first = false;
      j = (*this)(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::uint32_t Rank3Matroid::key(int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return static_cast<std::uint32_t>((t[0] << 16) | (t[1] << 8) | t[2]);
}

Rank3Matroid::Rank3Matroid(int ground, const std::vector<Triple>& nonbases) : m_(ground) {
  std::set<Triple> s;
  for (auto t : nonbases) {
    std::sort(t.begin(), t.end());
    if (t[0] < 1 || t[2] > ground || t[0] == t[1] || t[1] == t[2]) throw ParseError("invalid non-basis triple");
    s.insert(t);
  }
  sorted_.assign(s.begin(), s.end());
  for (const auto& t : sorted_) set_.insert(key(t[0], t[1], t[2]));
}

bool Rank3Matroid::is_nonbasis(int i, int j, int k) const { return set_.count(key(i, j, k)) > 0; }

std::vector<Rank3Matroid::Triple> Rank3Matroid::difference(const Rank3Matroid& b) const {
  std::vector<Triple> out;
  for (const auto& t : sorted_)
    if (!b.is_nonbasis(t[0], t[1], t[2])) out.push_back(t);
  return out;
}

Rank3Matroid Rank3Matroid::relabeled(const Permutation& s) const {
  std::vector<Triple> nb;
  for (const auto& t : sorted_) nb.push_back({s(t[0]), s(t[1]), s(t[2])});
  return Rank3Matroid(m_, nb);
}

std::string Rank3Matroid::to_string() const {
  std::ostringstream os;
  os << "Rank3Matroid(" << m_ << "; ";
  for (std::size_t i = 0; i < sorted_.size(); ++i)
    os << (i ? " " : "") << "{" << sorted_[i][0] << "," << sorted_[i][1] << "," << sorted_[i][2] << "}";
  os << ")";
  return os.str();
}

const std::array<int, 8>& heptagon_position() {
  static const std::array<int, 8> pos = {0, 1, 2, 5, 6, 3, 4, 7};
  return pos;
}

namespace {
Rank3Matroid heptagon_matroid(const std::array<int, 8>& pos) {
  std::vector<Rank3Matroid::Triple> nb;
  for (int c = 1; c <= 7; ++c)
    for (int a = 1; a <= 7; ++a)
      for (int b = a + 1; b <= 7; ++b)
        if (((pos[a] + pos[b] - 2 * pos[c]) % 7 + 7) % 7 == 0) nb.push_back({a, b, c + 7});
  return Rank3Matroid(14, nb);
}
}  // namespace

Rank3Matroid matroid_M7() { return heptagon_matroid(heptagon_position()); }
Rank3Matroid matroid_M7_heptagon() { return heptagon_matroid({0, 1, 2, 3, 4, 5, 6, 7}); }

Rank3Matroid matroid_M8() {
  std::vector<Rank3Matroid::Triple> nb;
  int k = 0;
  for (const auto& part : octagon_partition()) {
    ++k;
    for (auto [i, j] : part) nb.push_back({i, j, k + 8});
  }
  return Rank3Matroid(16, nb);
}

bool is_automorphism(const Rank3Matroid& m, const Permutation& s) {
  if (s.size() != m.ground()) return false;
  for (const auto& t : m.nonbases())
    if (!m.is_nonbasis(s(t[0]), s(t[1]), s(t[2]))) return false;
  return true;  // injective on a finite set, so onto
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermutationGroup group_closure(const std::vector<Permutation>& gens, std::size_t limit) {
  if (gens.empty()) throw ParseError("group_closure needs at least one generator");
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  Permutation e = Permutation::identity(gens[0].size());
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > limit) throw BudgetExceeded("group closure exceeded " + std::to_string(limit));
        queue.push_back(q);
      }
    }
  }
  return PermutationGroup{std::vector<Permutation>(seen.begin(), seen.end())};
}

Permutation sigma1() { return Permutation::parse_cycles(14, "(1,7,4,3,6,5,2)(8,14,11,10,13,12,9)"); }
Permutation sigma2() { return Permutation::parse_cycles(14, "(1,3,5,6,7,2)(8,10,12,13,14,9)"); }
Permutation sigma0() { return Permutation::parse_cycles(14, "(1,2,4)(3,6,7)(8,9,11)(10,13,14)"); }

std::array<Permutation, 3> m8_involutions() {
  return {Permutation::parse_cycles(16, "(2,4)(3,7)(6,8)(9,11)(10,14)(13,15)"),
          Permutation::parse_cycles(16, "(2,6)(4,8)(9,13)(11,15)"),
          Permutation::parse_cycles(16, "(1,2)(3,8)(4,7)(5,6)(9,13)(10,12)(14,16)")};
}
Permutation m8_commuting_involution() { return Permutation::parse_cycles(16, "(1,5)(2,6)(3,7)(4,8)"); }

}  // namespace linedyn
