#include <random>

#include <gtest/gtest.h>

#include "kostka/levi.hpp"
#include "support.hpp"

using namespace kostka;
using kostka::testing::all_types;

namespace {

WeightFW fw(std::initializer_list<Rational> xs) { return WeightFW::of(xs); }

// A random point of K(L): lambda dominant on L, mu a random nonnegative combination
// of the L-vertices of IP_lambda.
LeviWeightPair random_levi_pair(std::mt19937_64& rng, const RootDatum& d, const NodeSet& levi) {
  const std::size_t n = levi.size();
  const WeightFW lam = kostka::testing::random_dominant(rng, n, 3);
  const RatMatrix cl = levi_cartan(d, levi);
  std::uniform_int_distribution<int> weight(0, 3);
  WeightFW mu = WeightFW::zero(n);
  int total = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const int w = weight(rng);
    if (w == 0) continue;
    std::vector<std::size_t> local;
    for (std::size_t k = 0; k < n; ++k)
      if (m & (1U << k)) local.push_back(k);
    const RatVector c = detail::levi_coefficients(cl, lam.coords, local);
    mu = mu + Rational(w) * WeightFW{detail::subtract_roots(cl, lam.coords, c)};
    total += w;
  }
  if (total == 0) return {levi, lam, lam};
  return {levi, lam, Rational(1, total) * mu};
}

}  // namespace

TEST(ExtendByZero, Examples) {
  const auto c4 = build(Letter::C, 4);
  EXPECT_EQ(extend_by_zero(c4, {3}, fw({2})), fw({0, 0, 2, 0}));
  EXPECT_EQ(extend_by_zero(c4, {1, 4}, fw({0, 0})), WeightFW::zero(4));
  EXPECT_EQ(extend_by_zero(c4, {2, 3}, fw({0, 3})), fw({0, 0, 3, 0}));
  EXPECT_THROW(extend_by_zero(c4, {2, 3}, fw({0, -1})), NotDominant);
  EXPECT_THROW(extend_by_zero(c4, {2, 3}, fw({1})), DimensionMismatch);
}

TEST(Induce, Examples) {
  const auto c4 = build(Letter::C, 4);
  // (4 varpi_3^L, 0) on the A3 Levi {1,2,3}.
  auto [l1, m1] = induce(c4, {{1, 2, 3}, fw({0, 0, 4}), fw({0, 0, 0})});
  EXPECT_EQ(l1, fw({0, 0, 4, 0}));
  EXPECT_EQ(m1, fw({0, 0, 0, 3}));

  auto [l2, m2] = induce(c4, {{1, 2, 3, 4}, fw({0, 0, 2, 0}), fw({0, 0, 0, 0})});
  EXPECT_EQ(l2, fw({0, 0, 2, 0}));
  EXPECT_EQ(m2, WeightFW::zero(4));

  auto [l3, m3] = induce(c4, {{2, 4}, fw({0, 0}), fw({0, 0})});
  EXPECT_EQ(l3, WeightFW::zero(4));
  EXPECT_EQ(m3, WeightFW::zero(4));

  EXPECT_THROW(induce(c4, {{3}, fw({0}), fw({1})}), NotInLeviCone);
}

TEST(InduceVertex, Examples) {
  const auto c4 = build(Letter::C, 4);
  const Vertex v = induce_vertex(c4, {3, 4}, fw({2, 0}), {3, 4});
  EXPECT_EQ(v.point, fw({0, 2, 0, 0}));
  EXPECT_EQ(v.defining_I, (NodeSet{3, 4}));

  const WeightFW lam = fw({1, 2, 0, 1});
  EXPECT_EQ(induce_vertex(c4, NodeSet::all(4), lam, {}).point, lam);

  // The C2 Levi {3,4} with I' = {3}: 2 varpi3 - alpha3 = varpi2 + varpi4.
  const Vertex v3 = induce_vertex(c4, {3, 4}, fw({2, 0}), {3});
  EXPECT_EQ(v3.point, fw({0, 1, 0, 1}));
  EXPECT_EQ(v3.point, vertex(c4, fw({0, 0, 2, 0}), {3}).point);
}

TEST(InduceVertex, MatchesAmbientVertex) {
  std::mt19937_64 rng(41);
  for (const auto& t : all_types(6)) {
    const auto d = build(t.letter, t.rank);
    for (int trial = 0; trial < 15; ++trial) {
      const NodeSet levi = kostka::testing::random_subset(rng, t.rank);
      const NodeSet sub = NodeSet::from_mask(kostka::testing::random_subset(rng, t.rank).mask() & levi.mask());
      const WeightFW lam_L = kostka::testing::random_dominant(rng, levi.size(), 3);
      const Vertex lifted = induce_vertex(d, levi, lam_L, sub);
      const Vertex direct = vertex(d, extend_by_zero(d, levi, lam_L), sub);
      EXPECT_EQ(lifted, direct) << t.name() << levi.str() << sub.str();
    }
  }
}

TEST(Induce, PreservesConeMembershipAndComposes) {
  std::mt19937_64 rng(43);
  for (const auto& t : all_types(6)) {
    const auto d = build(t.letter, t.rank);
    for (int trial = 0; trial < 25; ++trial) {
      const NodeSet outer = kostka::testing::random_subset(rng, t.rank);
      const NodeSet inner = NodeSet::from_mask(kostka::testing::random_subset(rng, t.rank).mask() & outer.mask());
      const LeviWeightPair p = random_levi_pair(rng, d, inner);
      ASSERT_TRUE(in_levi_cone(d, p));
      const auto [lam, mu] = induce(d, p);
      EXPECT_TRUE(steinberg_member(d, lam, mu)) << t.name();
      EXPECT_TRUE(induce_compose_check(d, inner, outer, p)) << t.name() << inner.str() << outer.str();
    }
  }
}

TEST(InduceComposeCheck, Examples) {
  const auto c4 = build(Letter::C, 4);
  const LeviWeightPair p{{3}, fw({2}), fw({0})};
  EXPECT_TRUE(induce_compose_check(c4, {3}, {2, 3}, p));
  EXPECT_TRUE(induce_compose_check(c4, {3}, {3}, p));
  EXPECT_TRUE(induce_compose_check(c4, {3}, {3, 4}, {{3}, fw({1}), fw({0})}));
  EXPECT_THROW(induce_compose_check(c4, {3}, {1, 2}, p), std::invalid_argument);
}

// Membership in K(L) for a disconnected L is the conjunction over its components.
TEST(LeviCone, DirectSumOverComponents) {
  const auto d6 = build(Letter::D, 6);
  const NodeSet levi{1, 2, 5, 6};
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> coord(-1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    WeightFW lam = WeightFW::zero(4), mu = WeightFW::zero(4);
    for (auto& x : lam.coords) x = coord(rng);
    for (auto& x : mu.coords) x = coord(rng);
    bool expected = true;
    for (const auto& comp : components(d6, levi)) {
      const auto local = build(Letter::A, static_cast<int>(comp.size()));
      WeightFW l, m;
      for (int g : comp) {
        l.coords.push_back(lam[static_cast<std::size_t>(levi.local_index(g))]);
        m.coords.push_back(mu[static_cast<std::size_t>(levi.local_index(g))]);
      }
      expected = expected && steinberg_member(local, l, m);
    }
    EXPECT_EQ(in_levi_cone(d6, {levi, lam, mu}), expected);
  }
}

TEST(InduceSum, Examples) {
  const auto c4 = build(Letter::C, 4);
  const WeightFW a = fw({1, 0, 0, 0}), b = fw({0, 0, 1, 0});
  const auto [lam, mu] = induce_sum(c4, {{{1}, fw({1}), fw({0})}, {{3}, fw({1}), fw({0})}});
  EXPECT_EQ(lam, a + b);
  EXPECT_EQ(mu, vertex(c4, a + b, {1, 3}).point);

  const auto single = induce_sum(c4, {{{2, 3}, fw({1, 1}), fw({0, 0})}});
  EXPECT_EQ(single, induce(c4, {{2, 3}, fw({1, 1}), fw({0, 0})}));

  const auto none = induce_sum(c4, {});
  EXPECT_EQ(none.first, WeightFW::zero(4));
  EXPECT_EQ(none.second, WeightFW::zero(4));

  EXPECT_THROW(induce_sum(c4, {{{1, 2}, fw({0, 0}), fw({0, 0})}, {{2, 3}, fw({0, 0}), fw({0, 0})}}), OverlappingLevis);
  EXPECT_THROW(induce_sum(c4, {{{1, 3}, fw({0, 0}), fw({0, 0})}}), DisconnectedLevi);
}

TEST(InduceSum, EqualsVertexOfSummedWeights) {
  std::mt19937_64 rng(53);
  for (const auto& t : all_types(6)) {
    const auto d = build(t.letter, t.rank);
    for (int trial = 0; trial < 10; ++trial) {
      const NodeSet s = kostka::testing::random_subset(rng, t.rank);
      std::vector<LeviWeightPair> pairs;
      WeightFW total = WeightFW::zero(d.size());
      for (const auto& comp : components(d, s)) {
        const WeightFW lam_L = kostka::testing::random_dominant(rng, comp.size(), 3);
        const RatMatrix cl = levi_cartan(d, comp);
        std::vector<std::size_t> everything(comp.size());
        for (std::size_t k = 0; k < comp.size(); ++k) everything[k] = k;
        const RatVector c = detail::levi_coefficients(cl, lam_L.coords, everything);
        pairs.push_back({comp, lam_L, {detail::subtract_roots(cl, lam_L.coords, c)}});
        total = total + extend_by_zero(d, comp, lam_L);
      }
      const auto [lam, mu] = induce_sum(d, pairs);
      EXPECT_EQ(lam, total);
      EXPECT_EQ(mu, vertex(d, total, s).point) << t.name() << s.str();
    }
  }
}

// Every ray (varpi_i, v) with Levi L equals Ind_L^G(varpi_i^L, 0) after scaling.
TEST(Induce, RaysAreLiftedFromZero) {
  for (const auto& t : all_types(8)) {
    const auto d = build(t.letter, t.rank);
    for (const auto& r : all_rays(d)) {
      if (r.levi.empty()) continue;
      const WeightFW fund_L = WeightFW::fundamental(r.levi.size(), r.levi.local_index(r.node) + 1);
      const auto [lam, mu] = induce(d, {r.levi, fund_L, WeightFW::zero(r.levi.size())});
      EXPECT_EQ(lam, r.lambda_fw);
      EXPECT_EQ(mu, r.mu_fw);
      const Rational k(r.k_primitive);
      const auto [klam, kmu] = induce(d, {r.levi, k * fund_L, WeightFW::zero(r.levi.size())});
      EXPECT_EQ(klam, r.scaled_lambda(r.k_primitive));
      EXPECT_EQ(kmu, r.scaled_mu(r.k_primitive));
    }
  }
}
