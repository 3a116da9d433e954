#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kostka/kostka.hpp"

namespace kostka::testing {

struct TypeRank {
  Letter letter;
  int rank;

  [[nodiscard]] std::string name() const { return std::string(1, to_char(letter)) + std::to_string(rank); }
};

/// Every supported (type, rank) with rank <= max_rank, in a fixed order.
inline std::vector<TypeRank> all_types(int max_rank) {
  std::vector<TypeRank> out;
  for (Letter l : {Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F, Letter::G})
    for (int r = 1; r <= max_rank; ++r)
      if (rank_supported(l, r)) out.push_back({l, r});
  return out;
}

inline WeightFW random_dominant(std::mt19937_64& rng, std::size_t r, int max_coord) {
  std::uniform_int_distribution<int> coord(0, max_coord);
  WeightFW w = WeightFW::zero(r);
  for (auto& x : w.coords) x = coord(rng);
  return w;
}

inline NodeSet random_subset(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<std::uint32_t> m(0, (1U << rank) - 1);
  return NodeSet::from_mask(m(rng));
}

/// Dominant weights used by the oracle sweeps: each varpi_i, rho, 2 rho, plus random ones.
inline std::vector<WeightFW> sweep_weights(const RootDatum& d, std::mt19937_64& rng, int randoms = 3,
                                           int max_coord = 3) {
  std::vector<WeightFW> out;
  for (int i = 1; i <= d.rank(); ++i) out.push_back(WeightFW::fundamental(d.size(), i));
  out.push_back(rho(d));
  out.push_back(Rational(2) * rho(d));
  for (int k = 0; k < randoms; ++k) out.push_back(random_dominant(rng, d.size(), max_coord));
  return out;
}

}  // namespace kostka::testing
