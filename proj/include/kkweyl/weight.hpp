#pragma once

#include <Eigen/Core>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kkweyl {

/// Largest rank the library handles. The Weyl-order guard is the practical
/// limit; rank 12 already means |W(A12)| = 13!, beyond enumeration.
inline constexpr int kMaxRank = 12;

/// Integer column vector with inline storage for up to kMaxRank entries.
/// Used for weights in fundamental-weight coordinates and for root
/// expansions in simple-root coordinates.
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxRank, 1>;

/// Square integer matrix of size rank x rank (Cartan data).
using IntMatrix =
    Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxRank, kMaxRank>;

/// Integral weight, coords[i] = <psi, alpha_i^vee>.
using Weight = IntVector;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lexicographic order on coordinates. Vectors of different size order by size.
struct WeightLess {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

struct WeightHash {
  std::size_t operator()(const IntVector& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      h ^= std::hash<int>{}(w[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct WeightEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

inline Weight zero_weight(int rank) { return Weight::Zero(rank); }

inline Weight make_weight(std::initializer_list<int> coords) {
  Weight w(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (int c : coords) w[i++] = c;
  return w;
}

inline bool same_weight(const IntVector& a, const IntVector& b) { return WeightEqual{}(a, b); }

/// "[1,-2,0]"
std::string format_weight(const IntVector& w);

/// Parses a comma-separated integer list such as "1,-2,0". Returns nullopt on
/// malformed input. Empty input yields an empty vector.
std::optional<std::vector<int>> parse_int_list(std::string_view text);

}  // namespace kkweyl
