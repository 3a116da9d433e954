#pragma once

// Levi induction K(L) -> K(G).
//
// Levi-local weights are indexed 1..|levi| following the sorted global node
// numbers of `levi`; every function that crosses between the two coordinate
// systems takes the levi NodeSet explicitly.

#include <stdexcept>
#include <utility>
#include <vector>

#include "kostka/cone.hpp"
#include "kostka/rootsys.hpp"

namespace kostka {

class NotInLeviCone : public std::invalid_argument {
 public:
  NotInLeviCone() : std::invalid_argument("kostka: pair is not in the Levi cone K(L)") {}
};

class OverlappingLevis : public std::invalid_argument {
 public:
  OverlappingLevis() : std::invalid_argument("kostka: Levi node sets overlap") {}
};

class DisconnectedLevi : public std::invalid_argument {
 public:
  DisconnectedLevi() : std::invalid_argument("kostka: Levi node set is not connected") {}
};

struct LeviWeightPair {
  NodeSet levi;
  WeightFW lambda_L;
  WeightFW mu_L;
};

inline RatMatrix levi_cartan(const RootDatum& d, const NodeSet& levi) {
  d.check_nodes(levi);
  return d.cartan().principal_submatrix(levi.zero_based());
}

/// Membership in K(L), decided factor by factor.
inline bool in_levi_cone(const RootDatum& d, const LeviWeightPair& p) {
  if (p.lambda_L.size() != p.levi.size() || p.mu_L.size() != p.levi.size())
    throw DimensionMismatch("Levi weight length vs |levi|");
  if (p.levi.empty()) return true;
  for (const auto& f : sub_datum(d, p.levi)) {
    RatVector lam, diff;
    for (int g : f.nodes) {
      const auto k = static_cast<std::size_t>(p.levi.local_index(g));
      if (p.lambda_L[k].sign() < 0 || p.mu_L[k].sign() < 0) return false;
      lam.push_back(p.lambda_L[k]);
      diff.push_back(p.lambda_L[k] - p.mu_L[k]);
    }
    const auto c = solve(f.cartan.transpose(), diff);
    if (!c.ok()) throw SingularMatrix();
    for (const auto& x : c.x)
      if (x.sign() < 0) return false;
  }
  return true;
}

inline WeightFW extend_by_zero(const RootDatum& d, const NodeSet& levi, const WeightFW& lambda_L) {
  d.check_nodes(levi);
  if (lambda_L.size() != levi.size()) throw DimensionMismatch("Levi weight length vs |levi|");
  if (!lambda_L.dominant()) throw NotDominant();
  WeightFW lambda = WeightFW::zero(d.size());
  for (std::size_t k = 0; k < levi.size(); ++k) lambda[static_cast<std::size_t>(levi[k] - 1)] = lambda_L[k];
  return lambda;
}

namespace detail {

/// Induction from the sub-system on `levi_idx` (0-based, ascending) of an
/// arbitrary ambient Cartan matrix. Assumes the pair is in the Levi cone.
inline std::pair<RatVector, RatVector> induce_local(const RatMatrix& ambient, std::span<const std::size_t> levi_idx,
                                                    std::span<const Rational> lambda_L,
                                                    std::span<const Rational> mu_L) {
  const std::size_t n = ambient.rows();
  RatVector lambda(n), diff;
  for (std::size_t k = 0; k < levi_idx.size(); ++k) {
    lambda[levi_idx[k]] = lambda_L[k];
    diff.push_back(lambda_L[k] - mu_L[k]);
  }
  RatVector c(n);
  if (!levi_idx.empty()) {
    const auto sol = solve(ambient.principal_submatrix(levi_idx).transpose(), diff);
    if (!sol.ok()) throw SingularMatrix();
    for (std::size_t k = 0; k < levi_idx.size(); ++k) c[levi_idx[k]] = sol.x[k];
  }
  RatVector mu = subtract_roots(ambient, lambda, c);
  return {std::move(lambda), std::move(mu)};
}

}  // namespace detail

/// Ind_L^G(lambda_L, mu_L) = (lambda, lambda - sum c_i alpha_i), c carried over from L.
inline std::pair<WeightFW, WeightFW> induce(const RootDatum& d, const LeviWeightPair& p) {
  d.check_nodes(p.levi);
  if (!in_levi_cone(d, p)) throw NotInLeviCone();
  const auto idx = p.levi.zero_based();
  auto [lambda, mu] = detail::induce_local(d.cartan(), idx, p.lambda_L.coords, p.mu_L.coords);
  return {{std::move(lambda)}, {std::move(mu)}};
}

/// Lifts the L-vertex v_{I'}(lambda_L), computed in L's own coordinates.
inline Vertex induce_vertex(const RootDatum& d, const NodeSet& levi, const WeightFW& lambda_L, const NodeSet& sub) {
  d.check_nodes(levi);
  if (!sub.subset_of(levi)) throw std::invalid_argument("kostka: I' is not contained in the Levi");
  if (!lambda_L.dominant()) throw NotDominant();
  const RatMatrix cl = levi_cartan(d, levi);
  std::vector<std::size_t> local;
  for (int g : sub) local.push_back(static_cast<std::size_t>(levi.local_index(g)));
  const RatVector c = detail::levi_coefficients(cl, lambda_L.coords, local);
  const WeightFW v_L{detail::subtract_roots(cl, lambda_L.coords, c)};
  auto [lambda, mu] = induce(d, {levi, lambda_L, v_L});
  std::vector<int> support;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) support.push_back(levi[k]);
  return {std::move(mu), NodeSet(std::move(support))};
}

/// Checks Ind_L^G o Ind_{L'}^L = Ind_{L'}^G on a pair living on `inner`.
inline bool induce_compose_check(const RootDatum& d, const NodeSet& inner, const NodeSet& outer,
                                 const LeviWeightPair& p) {
  d.check_nodes(outer);
  if (!inner.subset_of(outer) || p.levi != inner)
    throw std::invalid_argument("kostka: compose check needs L' within L and a pair on L'");
  const auto direct = induce(d, p);

  const RatMatrix cl = levi_cartan(d, outer);
  std::vector<std::size_t> inner_in_outer;
  for (int g : inner) inner_in_outer.push_back(static_cast<std::size_t>(outer.local_index(g)));
  auto [lam_mid, mu_mid] = detail::induce_local(cl, inner_in_outer, p.lambda_L.coords, p.mu_L.coords);
  const auto staged = induce(d, {outer, {std::move(lam_mid)}, {std::move(mu_mid)}});
  return staged == direct;
}

/// Sum of inductions from pairwise disjoint connected Levis.
inline std::pair<WeightFW, WeightFW> induce_sum(const RootDatum& d, const std::vector<LeviWeightPair>& pairs) {
  NodeSet used;
  for (const auto& p : pairs) {
    if (!p.levi.disjoint(used)) throw OverlappingLevis();
    if (!p.levi.empty() && !is_connected(d, p.levi)) throw DisconnectedLevi();
    used = used.united(p.levi);
  }
  std::pair<WeightFW, WeightFW> total{WeightFW::zero(d.size()), WeightFW::zero(d.size())};
  for (const auto& p : pairs) {
    auto [lambda, mu] = induce(d, p);
    total.first = total.first + lambda;
    total.second = total.second + mu;
  }
  return total;
}

}  // namespace kostka
