#pragma once

#include "kkweyl/character.hpp"
#include "kkweyl/weyl_group.hpp"

#include <random>

namespace kkweyl {

/// Seeded source of random test inputs. Same seed, same sequence.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::uint64_t next_seed() { return rng_(); }

  /// Coordinates uniform in [-max_coord, max_coord].
  Weight weight(int rank, int max_coord) {
    Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = uniform(-max_coord, max_coord);
    return w;
  }
  /// Coordinates uniform in [0, max_coord].
  Weight dominant(int rank, int max_coord) {
    Weight w(rank);
    for (int i = 0; i < rank; ++i) w[i] = uniform(0, max_coord);
    return w;
  }
  int element(const WeylGroup& W) { return uniform(0, static_cast<int>(W.size()) - 1); }

  /// Up to `terms` random monomials with nonzero coefficients in [-3, 3].
  Character character(int rank, int terms, int max_coord) {
    Character chi(rank);
    for (int t = 0; t < terms; ++t) {
      int c = uniform(-3, 2);
      if (c >= 0) ++c;
      chi.add_term(weight(rank, max_coord), BigInt(c));
    }
    return chi;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kkweyl
