#pragma once

#include "kkweyl/weight.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kkweyl {

/// Raised for invalid user-facing input (bad type labels, malformed weights,
/// guard violations). Internal inconsistencies use std::logic_error.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CartanLabel {
  char family = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const CartanLabel&) const = default;
};

/// Parses "A2", "G2", "D4", ... Throws InputError on unknown family or a
/// rank outside the family's range.
CartanLabel parse_cartan_label(std::string_view text);
bool is_valid_label(const CartanLabel& label);

struct Root {
  Weight weight;      ///< fundamental-weight coordinates
  IntVector simple;   ///< expansion in simple roots
  IntVector coroot;   ///< <psi, alpha^vee> = coroot . psi
  int norm2 = 0;      ///< (alpha, alpha) in the symmetrized normalization
  int height = 0;     ///< sum of simple coordinates
};

/// Cartan data for a finite crystallographic root system.
///
/// Conventions: cartan(i, j) = <alpha_i^vee, alpha_j>, so column j of the
/// Cartan matrix is alpha_j in fundamental-weight coordinates. Node numbering
/// follows Bourbaki. In B_n the last node is short, in C_n it is long, in F4
/// nodes 1,2 are long, and in G2 node 1 is short (cartan = [[2,-3],[-1,2]]).
/// The symmetrizer d is the minimal positive integer vector with
/// d_i * a_ij symmetric; d_i is proportional to (alpha_i, alpha_i).
class RootSystem {
 public:
  /// Builds the root system. Throws InputError if the label is invalid.
  static RootSystem build(const CartanLabel& label);
  static RootSystem build(std::string_view label) { return build(parse_cartan_label(label)); }

  const CartanLabel& label() const { return label_; }
  int rank() const { return label_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntVector& symmetrizer() const { return symmetrizer_; }
  /// Symmetrized matrix (alpha_i, alpha_j) = d_i * a_ij.
  IntMatrix symmetrized() const;

  /// Positive roots, sorted by height then lexicographically on simple
  /// coordinates; the first rank() entries are the simple roots in order.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& simple_root(int i) const { return positive_roots_[static_cast<std::size_t>(i)]; }
  const Weight& rho() const { return rho_; }

  /// Coxeter order m_ij of s_i s_j.
  int braid_order(int i, int j) const;

  /// <psi, alpha^vee>.
  int pair(const Weight& psi, const Root& root) const;

  /// (a, b) for weights, exact.
  Rational inner(const Weight& a, const Weight& b) const;
  /// (psi, alpha) for a root, an integer in this normalization.
  int inner_with_root(const Weight& psi, const Root& root) const;

  /// det(cartan) and the integer adjugate, so simple coordinates of a weight
  /// are adjugate * psi / det.
  int cartan_det() const { return det_; }
  const IntMatrix& cartan_adjugate() const { return adjugate_; }

  /// Simple-root coordinates of psi if psi lies in the root lattice.
  std::optional<IntVector> simple_coords(const Weight& psi) const;
  /// det * <psi, rho^vee>-style height: det times the sum of the (rational)
  /// simple-root coordinates of psi. Orders weights compatibly with dominance.
  long long scaled_height(const Weight& psi) const;

  /// Weyl-group order predicted from the type, without enumeration.
  unsigned long long predicted_weyl_order() const;

 private:
  CartanLabel label_;
  IntMatrix cartan_;
  IntVector symmetrizer_;
  std::vector<Root> positive_roots_;
  Weight rho_;
  int det_ = 1;
  IntMatrix adjugate_;
  std::vector<std::vector<Rational>> weight_gram_;  // (omega_i, omega_j)
};

bool is_dominant(const RootSystem& rs, const Weight& psi);

/// Checks psi has the ambient rank; throws InputError otherwise.
void require_rank(const RootSystem& rs, const Weight& psi);

}  // namespace kkweyl
