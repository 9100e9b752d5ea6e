#pragma once

// Flat working form for long chains of multiplications and divisions by
// 1 - e(-alpha). Weights are packed into one 64-bit key whose integer order is
// the lexicographic order of the coordinates, so translating by a root is a
// key addition and both operations are single linear sweeps. Every operation
// returns nullopt instead of leaving the representable range; callers then
// fall back to the map-based Character.

#include "kkweyl/character.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace kkweyl::detail {

class Packing {
 public:
  /// Fields of 64 / rank bits (at most 31), centred on zero.
  explicit Packing(int rank);

  int rank() const { return rank_; }
  bool fits(long long coord) const { return coord >= lo_ && coord <= hi_; }
  std::uint64_t key(const Weight& w) const;
  Weight weight(std::uint64_t key) const;
  /// key(w + shift) = key(w) + delta(shift) whenever both weights fit.
  std::uint64_t delta(const Weight& shift) const;

 private:
  int rank_;
  int bits_;
  long long lo_;
  long long hi_;
};

/// Terms in ascending key order, zero coefficients never stored.
struct PackedCharacter {
  Packing packing;
  std::vector<std::pair<std::uint64_t, BigInt>> terms;
};

std::optional<PackedCharacter> pack(const Character& chi);
Character unpack(const PackedCharacter& p);

/// chi * (1 - e(-alpha)).
std::optional<PackedCharacter> times_one_minus_exp_neg(const PackedCharacter& chi,
                                                       const Root& alpha);

/// chi / (1 - e(-alpha)); throws DivisionError on a nonzero remainder.
std::optional<PackedCharacter> divide_one_minus_exp_neg(const PackedCharacter& chi,
                                                        const Root& alpha);

}  // namespace kkweyl::detail
