#pragma once

#include "kkweyl/character.hpp"
#include "kkweyl/weyl_group.hpp"

#include <json.hpp>

namespace kkweyl {

class DemazureExpression;

nlohmann::json weight_json(const IntVector& w);
nlohmann::json word_json(const Word& word);  // 1-based entries

/// {"type":"A2","terms":[{"weight":[1,0],"mult":"1"}, ...]}, terms in
/// lexicographic weight order, multiplicities as decimal strings.
nlohmann::json character_json(const RootSystem& rs, const Character& chi);
/// Inverse of character_json; throws InputError on a malformed document or a
/// type/rank mismatch.
Character character_from_json(const RootSystem& rs, const nlohmann::json& doc);

/// {"type":"A2","terms":[{"word":[1,2,1],"coeff":{...character...}}, ...]},
/// terms sorted by word length then lexicographically.
nlohmann::json expression_json(const DemazureExpression& expr);

/// Human-readable "{[1,0]:1, [0,0]:2}".
std::string format_character(const Character& chi);

}  // namespace kkweyl
