#pragma once

// The Kostka cone K(G) = {(lambda, mu) dominant : lambda - mu in Q_{>=0} Delta},
// its intersection polytopes IP_lambda, their vertices, and the extremal rays.
//
// For I a set of nodes, the vertex v_I(lambda) is the unique x with
//   <x, alpha_i^vee> = 0 (i in I),  <lambda - x, x_j> = 0 (j not in I),
// i.e. x = lambda - sum_{j in I} c_j alpha_j where c solves C_I^T c = lambda|_I.
// For lambda = varpi_i this makes c the i-th column of (C_I^T)^{-1}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kostka/rootsys.hpp"
#include "kostka/weyl.hpp"

namespace kostka {

class NotDominant : public std::invalid_argument {
 public:
  NotDominant() : std::invalid_argument("kostka: weight is not dominant") {}
};

class NotInCone : public std::invalid_argument {
 public:
  NotInCone() : std::invalid_argument("kostka: pair is not in the Kostka cone") {}
};

enum class FormKind { DominantLambda, DominantMu, RootCoefficient };

/// An affine functional coeffs . x + constant; the constraint it encodes is >= 0.
struct LinearForm {
  FormKind kind;
  int index;  // 1-based node of the inequality family
  RatVector coeffs;
  Rational constant;

  [[nodiscard]] Rational evaluate(std::span<const Rational> x) const { return dot(coeffs, x) + constant; }
  [[nodiscard]] std::string label() const {
    const char* k = kind == FormKind::DominantLambda ? "dom-lambda" : kind == FormKind::DominantMu ? "dom-mu" : "rootcoef";
    return std::string(k) + "(" + std::to_string(index) + ")";
  }
};

struct ConstraintSystem {
  std::size_t dimension;
  std::vector<LinearForm> forms;

  [[nodiscard]] bool satisfied_by(std::span<const Rational> x) const {
    return std::all_of(forms.begin(), forms.end(), [&](const LinearForm& f) { return f.evaluate(x).sign() >= 0; });
  }
  /// Forms vanishing at x.
  [[nodiscard]] std::vector<const LinearForm*> tight_at(std::span<const Rational> x) const {
    std::vector<const LinearForm*> out;
    for (const auto& f : forms)
      if (f.evaluate(x).is_zero()) out.push_back(&f);
    return out;
  }
};

/// The 3r Steinberg inequalities on (lambda, mu) in R^{2r}, lambda first.
inline ConstraintSystem cone_constraints(const RootDatum& d) {
  const std::size_t r = d.size();
  ConstraintSystem sys{2 * r, {}};
  for (std::size_t i = 0; i < r; ++i) {
    RatVector e(2 * r);
    e[i] = 1;
    sys.forms.push_back({FormKind::DominantLambda, static_cast<int>(i + 1), std::move(e), 0});
  }
  for (std::size_t i = 0; i < r; ++i) {
    RatVector e(2 * r);
    e[r + i] = 1;
    sys.forms.push_back({FormKind::DominantMu, static_cast<int>(i + 1), std::move(e), 0});
  }
  const RatMatrix& m = d.inverse_transpose();
  for (std::size_t j = 0; j < r; ++j) {
    RatVector f(2 * r);
    for (std::size_t k = 0; k < r; ++k) {
      f[k] = m(j, k);
      f[r + k] = -m(j, k);
    }
    sys.forms.push_back({FormKind::RootCoefficient, static_cast<int>(j + 1), std::move(f), 0});
  }
  return sys;
}

/// The 2r inequalities of IP_lambda on mu in R^r.
inline ConstraintSystem polytope_constraints(const RootDatum& d, const WeightFW& lambda) {
  const std::size_t r = d.size();
  ConstraintSystem sys{r, {}};
  for (std::size_t i = 0; i < r; ++i) {
    RatVector e(r);
    e[i] = 1;
    sys.forms.push_back({FormKind::DominantMu, static_cast<int>(i + 1), std::move(e), 0});
  }
  const RatMatrix& m = d.inverse_transpose();
  const RatVector shift = m * lambda.coords;
  for (std::size_t j = 0; j < r; ++j) {
    RatVector f(r);
    for (std::size_t k = 0; k < r; ++k) f[k] = -m(j, k);
    sys.forms.push_back({FormKind::RootCoefficient, static_cast<int>(j + 1), std::move(f), shift[j]});
  }
  return sys;
}

inline bool steinberg_member(const RootDatum& d, const WeightFW& lambda, const WeightFW& mu) {
  return lambda.dominant() && mu.dominant() && fw_to_alpha(d, lambda - mu).nonnegative();
}

namespace detail {

/// Coefficients c (full length, zero off `nodes`) with lambda - sum c_j alpha_j
/// orthogonal to every alpha_i^vee, i in nodes. `nodes` are 0-based.
inline RatVector levi_coefficients(const RatMatrix& cartan, std::span<const Rational> lambda,
                                   std::span<const std::size_t> nodes) {
  RatVector c(cartan.rows());
  if (nodes.empty()) return c;
  const RatMatrix sub_t = cartan.principal_submatrix(nodes).transpose();
  RatVector rhs;
  for (auto i : nodes) rhs.push_back(lambda[i]);
  const auto sol = solve(sub_t, rhs);
  if (!sol.ok()) throw SingularMatrix();
  for (std::size_t k = 0; k < nodes.size(); ++k) c[nodes[k]] = sol.x[k];
  return c;
}

/// lambda - cartan^T c.
inline RatVector subtract_roots(const RatMatrix& cartan, std::span<const Rational> lambda,
                                std::span<const Rational> c) {
  RatVector x(lambda.begin(), lambda.end());
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c[j] * cartan(j, i);
  }
  return x;
}

}  // namespace detail

struct Vertex {
  WeightFW point;
  NodeSet defining_I;  // the smallest I with v_I(lambda) = point

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Root coefficients of lambda - v_I(lambda); supported on I.
inline RootCoords vertex_offset(const RootDatum& d, const WeightFW& lambda, const NodeSet& nodes) {
  d.check_nodes(nodes);
  if (lambda.size() != d.size()) throw DimensionMismatch("weight length vs rank");
  const auto idx = nodes.zero_based();
  return {detail::levi_coefficients(d.cartan(), lambda.coords, idx)};
}

inline Vertex vertex(const RootDatum& d, const WeightFW& lambda, const NodeSet& nodes) {
  if (lambda.size() != d.size()) throw DimensionMismatch("weight length vs rank");
  if (!lambda.dominant()) throw NotDominant();
  const RootCoords c = vertex_offset(d, lambda, nodes);
  std::vector<int> support;
  for (int i : nodes)
    if (!c[static_cast<std::size_t>(i - 1)].is_zero()) support.push_back(i);
  return {{detail::subtract_roots(d.cartan(), lambda.coords, c.coords)}, NodeSet(std::move(support))};
}

/// All vertices of IP_lambda, one per distinct point, ordered by defining set.
inline std::vector<Vertex> ip_vertices(const RootDatum& d, const WeightFW& lambda) {
  if (!lambda.dominant()) throw NotDominant();
  std::map<WeightFW, NodeSet> by_point;
  const std::uint32_t full = NodeSet::all(d.rank()).mask();
  for (std::uint32_t m = 0; m <= full; ++m) {
    Vertex v = vertex(d, lambda, NodeSet::from_mask(m));
    by_point.emplace(std::move(v.point), std::move(v.defining_I));
  }
  std::vector<Vertex> out;
  for (auto& [p, s] : by_point) out.push_back({p, s});
  std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return a.defining_I < b.defining_I; });
  return out;
}

/// An extremal ray (varpi_node, mu) of K(G), mu = varpi_node - sum c_j alpha_j.
struct RayRecord {
  int node;
  NodeSet levi;
  WeightFW lambda_fw;
  WeightFW mu_fw;
  RootCoords c_alpha;
  std::int64_t k_primitive;  // least k making (k lambda, k mu) integral with k c integral
  std::int64_t k_det;        // det of the Levi Cartan matrix (1 for the empty Levi)

  [[nodiscard]] WeightFW scaled_lambda(std::int64_t k) const { return Rational(k) * lambda_fw; }
  [[nodiscard]] WeightFW scaled_mu(std::int64_t k) const { return Rational(k) * mu_fw; }
};

inline RayRecord make_ray(const RootDatum& d, int node, const NodeSet& levi) {
  const WeightFW lambda = WeightFW::fundamental(d.size(), node);
  const RootCoords c = vertex_offset(d, lambda, levi);
  WeightFW mu{detail::subtract_roots(d.cartan(), lambda.coords, c.coords)};
  std::int64_t k_det = 1;
  if (!levi.empty()) {
    const Rational det = determinant(d.cartan().principal_submatrix(levi.zero_based()));
    k_det = det.num();
  }
  const std::int64_t k_prim = common_denominator(c.coords);
  return {node, levi, lambda, std::move(mu), c, k_prim, k_det};
}

/// One ray per Levi in {} + connected_subsets_containing(node).
inline std::vector<RayRecord> rays_for_node(const RootDatum& d, int node) {
  d.check_node(node);
  std::vector<RayRecord> out{make_ray(d, node, NodeSet{})};
  for (const auto& levi : connected_subsets_containing(d, node)) out.push_back(make_ray(d, node, levi));
  return out;
}

inline std::vector<RayRecord> all_rays(const RootDatum& d) {
  std::vector<RayRecord> out;
  for (int i = 1; i <= d.rank(); ++i) {
    auto part = rays_for_node(d, i);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

/// True iff the Steinberg forms tight at (lambda, mu) cut out a line.
inline bool verify_extremal(const RootDatum& d, const WeightFW& lambda, const WeightFW& mu) {
  if (!steinberg_member(d, lambda, mu)) throw NotInCone();
  const ConstraintSystem sys = cone_constraints(d);
  RatVector x = lambda.coords;
  x.insert(x.end(), mu.coords.begin(), mu.coords.end());
  const auto tight = sys.tight_at(x);
  RatMatrix a(tight.size(), sys.dimension);
  for (std::size_t r = 0; r < tight.size(); ++r)
    for (std::size_t c = 0; c < sys.dimension; ++c) a(r, c) = tight[r]->coeffs[c];
  return nullspace_dim(a) == 1;
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t b = 1;
  for (std::uint64_t j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

}  // namespace detail

/// Closed-form number of extremal rays; depends only on the Dynkin graph.
inline std::uint64_t count_rays_formula(Letter letter, int rank) {
  if (!rank_supported(letter, rank)) throw UnsupportedRank(letter, rank);
  using detail::binomial;
  const auto r = static_cast<std::uint64_t>(rank);
  switch (letter) {
    case Letter::A: case Letter::B: case Letter::C:
      return binomial(r + 1, 3) + binomial(r + 1, 2) + binomial(r + 1, 1) - 1;
    case Letter::G:
      return count_rays_formula(Letter::A, 2);
    case Letter::F:
      return count_rays_formula(Letter::A, 4);
    case Letter::D:
      return binomial(r, 3) + 3 * binomial(r, 2) + 2 * binomial(r, 1) - 3;
    case Letter::E:
      return binomial(r, 3) + 4 * binomial(r, 2) + binomial(r, 1) - 8;
  }
  return 0;
}

/// All pairs (varpi_i, w varpi_i), w in W.
inline std::vector<std::pair<WeightFW, WeightFW>> kprime_rays(const RootDatum& d, const OrbitBudget& budget = {}) {
  std::vector<std::pair<WeightFW, WeightFW>> out;
  const NodeSet all = NodeSet::all(d.rank());
  for (int i = 1; i <= d.rank(); ++i) {
    const WeightFW w = WeightFW::fundamental(d.size(), i);
    for (const auto& v : orbit(d, w, all, budget)) out.emplace_back(w, v);
  }
  return out;
}

}  // namespace kostka
