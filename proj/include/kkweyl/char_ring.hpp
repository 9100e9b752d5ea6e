#pragma once

#include "kkweyl/character.hpp"
#include "kkweyl/weyl_group.hpp"

namespace kkweyl {

/// Raised when an operation defined on R(G) receives a character that is not
/// W-invariant.
class NotInvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Character exponential(const Weight& psi) { return Character::exponential(psi); }

/// w(e(psi)) = e(w(psi)).
Character w_act(const WeylGroup& W, int w, const Character& chi);
/// s_i acting on weights, extended linearly.
Character simple_act(const RootSystem& rs, int i, const Character& chi);

/// True iff chi is fixed by every simple reflection.
bool is_w_invariant(const WeylGroup& W, const Character& chi);

/// Weyl-integration pairing on R(G):
/// (1/|W|) * constant term of a * bar(b) * Lambda * bar(Lambda).
/// Throws NotInvariantError for non-invariant input or if the constant term
/// is not divisible by |W|.
BigInt inner_G(const WeylGroup& W, const Character& a, const Character& b);

}  // namespace kkweyl
