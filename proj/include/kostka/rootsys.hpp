#pragma once

// Root data of the simple types in Bourbaki numbering, weight coordinates and
// Dynkin-diagram combinatorics.
//
// Convention: cartan(i, j) = <alpha_i, alpha_j^vee>. Row i of the Cartan
// matrix is alpha_i written in fundamental-weight coordinates, so
//   alpha_to_fw(c) = cartan^T c,   fw_to_alpha(w) = (cartan^T)^{-1} w.
// Node indices are 1-based in every public interface.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "kostka/exactla.hpp"

namespace kostka {

enum class Letter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char to_char(Letter l) { return static_cast<char>(l); }

inline Letter letter_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Letter::A;
    case 'B': case 'b': return Letter::B;
    case 'C': case 'c': return Letter::C;
    case 'D': case 'd': return Letter::D;
    case 'E': case 'e': return Letter::E;
    case 'F': case 'f': return Letter::F;
    case 'G': case 'g': return Letter::G;
    default: throw std::invalid_argument(std::string("kostka: unknown type letter '") + c + "'");
  }
}

class UnsupportedRank : public std::invalid_argument {
 public:
  UnsupportedRank(Letter l, int rank)
      : std::invalid_argument(std::string("kostka: unsupported rank for type ") + to_char(l) +
                              ": " + std::to_string(rank)) {}
};

inline bool rank_supported(Letter l, int r) {
  switch (l) {
    case Letter::A: return r >= 1;
    case Letter::B: case Letter::C: return r >= 2;
    case Letter::D: return r >= 4;
    case Letter::E: return r >= 6 && r <= 8;
    case Letter::F: return r == 4;
    case Letter::G: return r == 2;
  }
  return false;
}

/// Weight in fundamental-weight coordinates: entry i is <lambda, alpha_i^vee>.
struct WeightFW {
  RatVector coords;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  Rational& operator[](std::size_t i) { return coords[i]; }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  static WeightFW zero(std::size_t r) { return {RatVector(r)}; }
  static WeightFW fundamental(std::size_t r, int node) {
    WeightFW w = zero(r);
    w.coords.at(static_cast<std::size_t>(node - 1)) = 1;
    return w;
  }
  static WeightFW of(std::initializer_list<Rational> xs) { return {RatVector(xs)}; }

  [[nodiscard]] bool dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.sign() >= 0; });
  }
  [[nodiscard]] bool integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.is_integer(); });
  }

  friend WeightFW operator+(const WeightFW& a, const WeightFW& b) { return {a.coords + b.coords}; }
  friend WeightFW operator-(const WeightFW& a, const WeightFW& b) { return {a.coords - b.coords}; }
  friend WeightFW operator*(const Rational& s, const WeightFW& a) { return {s * a.coords}; }
  friend bool operator==(const WeightFW&, const WeightFW&) = default;
  friend auto operator<=>(const WeightFW& a, const WeightFW& b) { return a.coords <=> b.coords; }
};

/// Coefficients in the simple-root basis: entry j pairs with the coweight x_j.
struct RootCoords {
  RatVector coords;

  [[nodiscard]] std::size_t size() const { return coords.size(); }
  Rational& operator[](std::size_t i) { return coords[i]; }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  static RootCoords zero(std::size_t r) { return {RatVector(r)}; }
  static RootCoords simple(std::size_t r, int node) {
    RootCoords c = zero(r);
    c.coords.at(static_cast<std::size_t>(node - 1)) = 1;
    return c;
  }
  static RootCoords of(std::initializer_list<Rational> xs) { return {RatVector(xs)}; }

  [[nodiscard]] bool nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.sign() >= 0; });
  }
  [[nodiscard]] bool integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.is_integer(); });
  }

  friend RootCoords operator+(const RootCoords& a, const RootCoords& b) { return {a.coords + b.coords}; }
  friend RootCoords operator-(const RootCoords& a, const RootCoords& b) { return {a.coords - b.coords}; }
  friend RootCoords operator*(const Rational& s, const RootCoords& a) { return {s * a.coords}; }
  friend bool operator==(const RootCoords&, const RootCoords&) = default;
  friend auto operator<=>(const RootCoords& a, const RootCoords& b) { return a.coords <=> b.coords; }
};

/// A set of Dynkin nodes, kept sorted and duplicate-free (1-based).
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) : NodeSet(std::vector<int>(nodes)) {}
  explicit NodeSet(std::vector<int> nodes) : members_(std::move(nodes)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 1)
      throw std::out_of_range("kostka: node indices are 1-based");
  }

  static NodeSet from_mask(std::uint32_t mask) {
    std::vector<int> v;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1U) v.push_back(i + 1);
    return NodeSet(std::move(v));
  }
  static NodeSet all(int rank) {
    std::vector<int> v(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return NodeSet(std::move(v));
  }

  [[nodiscard]] std::uint32_t mask() const {
    std::uint32_t m = 0;
    for (int i : members_) m |= 1U << (i - 1);
    return m;
  }
  [[nodiscard]] bool contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
  }
  [[nodiscard]] bool subset_of(const NodeSet& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(), members_.end());
  }
  [[nodiscard]] bool disjoint(const NodeSet& o) const { return (mask() & o.mask()) == 0; }
  [[nodiscard]] NodeSet complement(int rank) const { return from_mask(all(rank).mask() & ~mask()); }
  [[nodiscard]] NodeSet united(const NodeSet& o) const { return from_mask(mask() | o.mask()); }
  [[nodiscard]] NodeSet without(int i) const { return from_mask(mask() & ~(1U << (i - 1))); }
  [[nodiscard]] bool within_rank(int rank) const { return members_.empty() || members_.back() <= rank; }

  /// Position of node i inside this set (0-based), or -1.
  [[nodiscard]] int local_index(int i) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), i);
    return (it != members_.end() && *it == i) ? static_cast<int>(it - members_.begin()) : -1;
  }

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] const std::vector<int>& members() const { return members_; }
  [[nodiscard]] int operator[](std::size_t k) const { return members_[k]; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  [[nodiscard]] std::vector<std::size_t> zero_based() const {
    std::vector<std::size_t> v;
    v.reserve(members_.size());
    for (int i : members_) v.push_back(static_cast<std::size_t>(i - 1));
    return v;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) s += (k ? "," : "") + std::to_string(members_[k]);
    return s + "}";
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  /// Size first, then lexicographic.
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

/// One simple factor of a Levi subsystem with its order-preserving node map.
struct LeviFactor {
  Letter letter;
  int rank;
  NodeSet nodes;    // global node numbers; local node k+1 is nodes[k]
  RatMatrix cartan; // principal submatrix of the ambient Cartan matrix
};

class RootDatum {
 public:
  static RootDatum build(Letter letter, int rank);

  [[nodiscard]] Letter letter() const { return letter_; }
  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(rank_); }
  [[nodiscard]] const RatMatrix& cartan() const { return cartan_; }
  [[nodiscard]] const RatMatrix& inverse_transpose() const { return inv_t_; }
  [[nodiscard]] std::string name() const { return std::string(1, to_char(letter_)) + std::to_string(rank_); }

  [[nodiscard]] bool adjacent(int i, int j) const {
    return i != j && !cartan_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).is_zero();
  }
  [[nodiscard]] std::vector<int> neighbours(int i) const {
    std::vector<int> n;
    for (int j = 1; j <= rank_; ++j)
      if (adjacent(i, j)) n.push_back(j);
    return n;
  }

  /// alpha_i in fundamental-weight coordinates (row i of the Cartan matrix).
  [[nodiscard]] WeightFW simple_root_fw(int i) const {
    const auto row = cartan_.row(static_cast<std::size_t>(i - 1));
    return {RatVector(row.begin(), row.end())};
  }

  void check_node(int i) const {
    if (i < 1 || i > rank_)
      throw std::out_of_range("kostka: node " + std::to_string(i) + " out of range for " + name());
  }
  void check_nodes(const NodeSet& s) const {
    if (!s.within_rank(rank_)) throw std::out_of_range("kostka: node set " + s.str() + " out of range for " + name());
  }

 private:
  RootDatum(Letter l, int r, RatMatrix c)
      : letter_(l), rank_(r), cartan_(std::move(c)), inv_t_(inverse(cartan_.transpose())) {}

  Letter letter_;
  int rank_;
  RatMatrix cartan_;
  RatMatrix inv_t_;
};

inline RootDatum RootDatum::build(Letter letter, int rank) {
  if (!rank_supported(letter, rank)) throw UnsupportedRank(letter, rank);
  const auto n = static_cast<std::size_t>(rank);
  RatMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  // Simple bond between 1-based nodes.
  auto bond = [&c](int i, int j) {
    c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = -1;
    c(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = -1;
  };
  // Multiple bond: <alpha_long, alpha_short^vee> = -m, <alpha_short, alpha_long^vee> = -1.
  auto multi = [&c](int long_node, int short_node, int m) {
    c(static_cast<std::size_t>(long_node - 1), static_cast<std::size_t>(short_node - 1)) = -m;
    c(static_cast<std::size_t>(short_node - 1), static_cast<std::size_t>(long_node - 1)) = -1;
  };
  switch (letter) {
    case Letter::A:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      break;
    case Letter::B:
      for (int i = 1; i < rank - 1; ++i) bond(i, i + 1);
      multi(rank - 1, rank, 2);
      break;
    case Letter::C:
      for (int i = 1; i < rank - 1; ++i) bond(i, i + 1);
      multi(rank, rank - 1, 2);
      break;
    case Letter::D:
      for (int i = 1; i < rank - 1; ++i) bond(i, i + 1);
      bond(rank - 2, rank);
      break;
    case Letter::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < rank; ++i) bond(i, i + 1);
      break;
    case Letter::F:
      bond(1, 2);
      multi(2, 3, 2);
      bond(3, 4);
      break;
    case Letter::G:
      multi(2, 1, 3);
      break;
  }
  return RootDatum(letter, rank, std::move(c));
}

inline RootDatum build(Letter letter, int rank) { return RootDatum::build(letter, rank); }

inline WeightFW rho(const RootDatum& d) { return {RatVector(d.size(), Rational(1))}; }

inline RootCoords fw_to_alpha(const RootDatum& d, const WeightFW& w) {
  if (w.size() != d.size()) throw DimensionMismatch("weight length vs rank");
  return {d.inverse_transpose() * w.coords};
}

inline WeightFW alpha_to_fw(const RootDatum& d, const RootCoords& c) {
  if (c.size() != d.size()) throw DimensionMismatch("root coordinates length vs rank");
  RatVector w(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (c[j].is_zero()) continue;
    for (std::size_t i = 0; i < d.size(); ++i) w[i] += c[j] * d.cartan()(j, i);
  }
  return {std::move(w)};
}

inline bool is_connected(const RootDatum& d, const NodeSet& s) {
  d.check_nodes(s);
  if (s.empty()) return false;
  std::uint32_t seen = 1U << (s[0] - 1);
  std::vector<int> stack{s[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : d.neighbours(v)) {
      const std::uint32_t bit = 1U << (u - 1);
      if (s.contains(u) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(u);
      }
    }
  }
  return seen == s.mask();
}

/// Connected components of the induced subdiagram, ordered by smallest node.
inline std::vector<NodeSet> components(const RootDatum& d, const NodeSet& s) {
  d.check_nodes(s);
  std::vector<NodeSet> out;
  std::uint32_t seen = 0;
  for (int start : s) {
    if (seen & (1U << (start - 1))) continue;
    std::vector<int> comp{start}, stack{start};
    seen |= 1U << (start - 1);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : d.neighbours(v)) {
        if (s.contains(u) && !(seen & (1U << (u - 1)))) {
          seen |= 1U << (u - 1);
          comp.push_back(u);
          stack.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

/// All connected node sets containing i, grown outward from {i}; sorted by size then lexicographically.
inline std::vector<NodeSet> connected_subsets_containing(const RootDatum& d, int i) {
  d.check_node(i);
  std::set<std::uint32_t> found{1U << (i - 1)};
  std::vector<std::uint32_t> frontier{1U << (i - 1)};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t m : frontier) {
      for (int v : NodeSet::from_mask(m)) {
        for (int u : d.neighbours(v)) {
          const std::uint32_t grown = m | (1U << (u - 1));
          if (grown != m && found.insert(grown).second) next.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<NodeSet> out;
  out.reserve(found.size());
  for (std::uint32_t m : found) out.push_back(NodeSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Identifies the simple type of a connected Cartan matrix given in some node order.
inline Letter classify_connected(const RatMatrix& c) {
  const std::size_t n = c.rows();
  if (n == 1) return Letter::A;
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t double_bonds = 0, triple_bonds = 0;
  std::size_t long_end = 0, short_end = 0;  // endpoints of the multiple bond
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c(i, j).is_zero()) continue;
      adj[i].push_back(j);
      // c(i,j) = -m with m > 1 means alpha_i is the long root of the bond.
      if (c(i, j) == Rational(-2)) { ++double_bonds; long_end = i; short_end = j; }
      if (c(i, j) == Rational(-3)) { ++triple_bonds; long_end = i; short_end = j; }
    }
  if (triple_bonds) return Letter::G;
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() > 2) branch.push_back(i);
  if (double_bonds) {
    if (n == 4 && adj[long_end].size() == 2 && adj[short_end].size() == 2) return Letter::F;
    // A double bond at the end of a chain: C if the terminal node is long.
    if (adj[long_end].size() == 1 && (adj[short_end].size() == 2 || long_end > short_end)) return Letter::C;
    return Letter::B;
  }
  if (branch.empty()) return Letter::A;
  // One trivalent node: arm lengths decide D versus E.
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch[0]]) {
    std::size_t len = 1, prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return Letter::D;
  return Letter::E;
}

}  // namespace detail

class EmptyNodeSet : public std::invalid_argument {
 public:
  EmptyNodeSet() : std::invalid_argument("kostka: empty node set") {}
};

/// Splits the Levi subsystem on `s` into its simple factors.
inline std::vector<LeviFactor> sub_datum(const RootDatum& d, const NodeSet& s) {
  if (s.empty()) throw EmptyNodeSet();
  std::vector<LeviFactor> out;
  for (NodeSet comp : components(d, s)) {
    RatMatrix sub = d.cartan().principal_submatrix(comp.zero_based());
    const Letter l = detail::classify_connected(sub);
    out.push_back({l, static_cast<int>(comp.size()), std::move(comp), std::move(sub)});
  }
  return out;
}

/// Positive roots in simple-root coordinates, by root strings from the simple roots.
inline std::vector<RootCoords> positive_roots(const RootDatum& d) {
  const std::size_t r = d.size();
  std::vector<RootCoords> roots;
  std::set<RootCoords> known;
  std::vector<RootCoords> layer;
  for (int i = 1; i <= d.rank(); ++i) layer.push_back(RootCoords::simple(r, i));
  while (!layer.empty()) {
    std::vector<RootCoords> next;
    for (const auto& b : layer) {
      if (!known.insert(b).second) continue;
      roots.push_back(b);
    }
    for (const auto& b : layer) {
      const WeightFW bw = alpha_to_fw(d, b);
      for (int i = 1; i <= d.rank(); ++i) {
        const RootCoords ai = RootCoords::simple(r, i);
        // p = how far the alpha_i-string extends downward from b.
        std::int64_t p = 0;
        for (RootCoords down = b - ai; known.count(down); down = down - ai) ++p;
        const std::int64_t q = p - bw[static_cast<std::size_t>(i - 1)].num();
        if (q > 0) {
          RootCoords up = b + ai;
          if (!known.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(std::move(up));
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const RootCoords& a, const RootCoords& b) {
    Rational ha, hb;
    for (const auto& x : a.coords) ha += x;
    for (const auto& x : b.coords) hb += x;
    return ha != hb ? ha < hb : a > b;
  });
  return roots;
}

inline std::uint64_t weyl_order(Letter letter, int rank) {
  if (!rank_supported(letter, rank)) throw UnsupportedRank(letter, rank);
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
  };
  switch (letter) {
    case Letter::A: return fact(rank + 1);
    case Letter::B: case Letter::C: return (std::uint64_t{1} << rank) * fact(rank);
    case Letter::D: return (std::uint64_t{1} << (rank - 1)) * fact(rank);
    case Letter::E: return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
    case Letter::F: return 1152;
    case Letter::G: return 12;
  }
  return 0;
}

/// |W_I| as the product of the factor orders (1 for the empty set).
inline std::uint64_t parabolic_order(const RootDatum& d, const NodeSet& s) {
  if (s.empty()) return 1;
  std::uint64_t order = 1;
  for (const auto& f : sub_datum(d, s)) {
    order *= weyl_order(f.letter, f.rank);
  }
  return order;
}

}  // namespace kostka
