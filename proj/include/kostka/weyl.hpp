#pragma once

// Parabolic Weyl group actions on weights: orbits, averages over W_I and the
// longest element. Group elements are never formed as matrices; everything is
// driven by simple reflections acting on fundamental-weight coordinates.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kostka/rootsys.hpp"

namespace kostka {

struct OrbitBudget {
  std::uint64_t max_orbit = 1'000'000;
  std::uint64_t max_group_order = 1'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error("kostka: budget exceeded: " + what) {}
};

/// s_i(w) = w - <w, alpha_i^vee> alpha_i.
inline WeightFW simple_reflection(const RootDatum& d, int i, const WeightFW& w) {
  d.check_node(i);
  const Rational m = w[static_cast<std::size_t>(i - 1)];
  if (m.is_zero()) return w;
  WeightFW out = w;
  const auto row = d.cartan().row(static_cast<std::size_t>(i - 1));
  for (std::size_t k = 0; k < out.size(); ++k)
    if (!row[k].is_zero()) out[k] -= m * row[k];
  return out;
}

/// The W_I-orbit of w, closed under the simple reflections in I.
inline std::set<WeightFW> orbit(const RootDatum& d, const WeightFW& w, const NodeSet& nodes,
                                const OrbitBudget& budget = {}) {
  d.check_nodes(nodes);
  std::set<WeightFW> seen{w};
  std::vector<WeightFW> frontier{w};
  while (!frontier.empty()) {
    std::vector<WeightFW> next;
    for (const auto& v : frontier)
      for (int i : nodes) {
        if (v[static_cast<std::size_t>(i - 1)].is_zero()) continue;
        WeightFW u = simple_reflection(d, i, v);
        if (seen.insert(u).second) {
          if (seen.size() > budget.max_orbit) throw BudgetExceeded("orbit size > " + std::to_string(budget.max_orbit));
          next.push_back(std::move(u));
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

namespace detail {

inline void check_group_budget(const RootDatum& d, const NodeSet& nodes, const OrbitBudget& budget) {
  const std::uint64_t order = parabolic_order(d, nodes);
  if (order > budget.max_group_order)
    throw BudgetExceeded("|W_I| = " + std::to_string(order) + " > " + std::to_string(budget.max_group_order));
}

}  // namespace detail

/// (1/|W_I|) sum_{w in W_I} w(lambda), computed from the orbit: every orbit point
/// occurs |W_I|/|orbit| times in the group sum.
inline WeightFW average_over_parabolic(const RootDatum& d, const WeightFW& w, const NodeSet& nodes,
                                       const OrbitBudget& budget = {}) {
  detail::check_group_budget(d, nodes, budget);
  const auto orb = orbit(d, w, nodes, budget);
  WeightFW sum = WeightFW::zero(d.size());
  for (const auto& v : orb) sum = sum + v;
  return Rational(1, static_cast<std::int64_t>(orb.size())) * sum;
}

/// The same average, summed over every element of W_I individually. Elements are
/// tracked through their image of rho, on which W_I acts freely.
inline WeightFW average_over_parabolic_by_group(const RootDatum& d, const WeightFW& w, const NodeSet& nodes,
                                                const OrbitBudget& budget = {}) {
  detail::check_group_budget(d, nodes, budget);
  std::map<WeightFW, WeightFW> elements{{rho(d), w}};  // w(rho) -> w(lambda)
  std::vector<std::pair<WeightFW, WeightFW>> frontier{{rho(d), w}};
  while (!frontier.empty()) {
    std::vector<std::pair<WeightFW, WeightFW>> next;
    for (const auto& [probe, image] : frontier)
      for (int i : nodes) {
        WeightFW p = simple_reflection(d, i, probe);
        if (elements.count(p)) continue;
        WeightFW q = simple_reflection(d, i, image);
        elements.emplace(p, q);
        next.emplace_back(std::move(p), std::move(q));
      }
    frontier = std::move(next);
  }
  if (elements.size() != parabolic_order(d, nodes))
    throw std::logic_error("kostka: enumerated parabolic subgroup has the wrong order");
  WeightFW sum = WeightFW::zero(d.size());
  for (const auto& [probe, image] : elements) sum = sum + image;
  return Rational(1, static_cast<std::int64_t>(elements.size())) * sum;
}

/// w_I(w) for w dominant on I: the unique point of the W_I-orbit with every
/// I-coordinate <= 0, reached by reflecting away positive I-coordinates.
inline WeightFW longest_element_image(const RootDatum& d, const WeightFW& w, const NodeSet& nodes,
                                      const OrbitBudget& budget = {}) {
  detail::check_group_budget(d, nodes, budget);
  WeightFW v = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : nodes)
      if (v[static_cast<std::size_t>(i - 1)].sign() > 0) {
        v = simple_reflection(d, i, v);
        moved = true;
      }
  }
  return v;
}

/// The dominant point of the full W-orbit of w.
inline WeightFW dominant_representative(const RootDatum& d, const WeightFW& w) {
  WeightFW v = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= d.rank(); ++i)
      if (v[static_cast<std::size_t>(i - 1)].sign() < 0) {
        v = simple_reflection(d, i, v);
        moved = true;
      }
  }
  return v;
}

}  // namespace kostka
