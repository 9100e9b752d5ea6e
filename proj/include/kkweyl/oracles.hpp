#pragma once

#include "kkweyl/char_ring.hpp"
#include "kkweyl/report.hpp"

#include <map>

namespace kkweyl {

/// Character of the irreducible representation with dominant highest weight
/// psi by Freudenthal's recursion, with exact rational inner products.
/// Throws InputError if psi is not dominant.
Character freudenthal(const RootSystem& rs, const Weight& psi);

/// prod over positive roots of <psi + rho, alpha^vee> / <rho, alpha^vee>.
BigInt weyl_dim(const RootSystem& rs, const Weight& psi);

/// Number of ways to write mu as a nonnegative integer combination of
/// positive roots.
BigInt kostant_partition(const RootSystem& rs, const Weight& mu);

/// sum_w sign(w) P(w(psi + rho) - (mu + rho)).
BigInt kostant_multiplicity(const WeylGroup& W, const Weight& psi, const Weight& mu);

using Decomposition = std::map<Weight, BigInt, WeightLess>;

/// Multiplicities n(phi) with gamma(e(psi1)) gamma(e(psi2)) = sum n(phi) gamma(e(phi)),
/// found by repeatedly stripping the highest remaining weight.
Decomposition tensor_decompose(const WeylGroup& W, const Weight& psi1, const Weight& psi2);

/// gamma against Freudenthal and weyl_dim for every dominant psi with
/// coords <= max_coord, plus sampled Kostant and tensor/inner_G cross-checks.
WeylReport verify_oracles(const WeylGroup& W, std::size_t trials = 20, std::uint64_t seed = 0,
                          int max_coord = 2);

}  // namespace kkweyl
