#pragma once

#include "kkweyl/char_ring.hpp"
#include "kkweyl/report.hpp"

namespace kkweyl {

/// Lambda = product over positive roots of (1 - e(-alpha)).
Character big_lambda(const RootSystem& rs);

/// sum_w sign(w) e(w(psi + rho) - rho).
Character weyl_numerator(const WeylGroup& W, const Weight& psi);
/// Linear extension of weyl_numerator.
Character weyl_numerator(const WeylGroup& W, const Character& chi);

/// Gamma: R(T) -> R(G), e(psi) |-> weyl_numerator(psi) / Lambda, the quotient
/// taken one positive-root factor at a time with remainder checks.
Character gamma(const WeylGroup& W, const Character& chi);
Character gamma(const WeylGroup& W, const Weight& psi);

/// Lambda: R(G) -> R(T), x |-> x * Lambda. Throws NotInvariantError if x is
/// not W-invariant.
Character lambda_map(const WeylGroup& W, const Character& x);

/// e(psi) (x) I_w = sign(w) e(w^{-1}(psi + rho) - rho), extended linearly.
/// Operators compose in Kasparov order: applying I_v then I_w equals I_{vw}.
Character intertwiner(const WeylGroup& W, int w, const Character& chi);

/// Sum over W of intertwiner(w, chi).
Character intertwiner_sum(const WeylGroup& W, const Character& chi);

/// w(Lambda) = sign(w) e(rho - w(rho)) Lambda for every w (sampled when
/// |W| > 5000, `trials` elements).
WeylReport check_w_action_lambda(const WeylGroup& W, std::size_t trials = 100,
                                 std::uint64_t seed = 0);

/// Both halves of the KK Weyl formula on random inputs:
///  (i)  lambda_map(gamma(e(psi))) = sum_w intertwiner(w, e(psi)), psi random
///       with |coords| <= max_coord,
///  (ii) gamma(lambda_map(x)) = |W| x for x = gamma(e(phi)), phi dominant
///       with coords <= dominant_max,
/// plus W-invariance of gamma(e(psi)), gamma(1) = 1 and the denominator
/// identity weyl_numerator(0) = Lambda.
WeylReport verify_weyl_kk(const WeylGroup& W, std::size_t trials, std::uint64_t seed,
                          int max_coord = 3, std::size_t dominant_trials = 25,
                          int dominant_max = 2);

/// intertwiner(w, intertwiner(v, chi)) = intertwiner(v w, chi); exhaustive
/// over pairs when |W| <= 12, otherwise `trials` sampled pairs.
WeylReport check_intertwiner_homomorphism(const WeylGroup& W, std::size_t trials,
                                          std::uint64_t seed);

/// inner_G(x, gamma(z)) = inner_T(lambda_map(x), z) for random invariant x and
/// random z, and inner_G(gamma(e(phi)), gamma(e(phi))) = 1 for dominant phi.
WeylReport check_adjointness(const WeylGroup& W, std::size_t trials, std::uint64_t seed,
                             int max_coord = 3);

}  // namespace kkweyl
