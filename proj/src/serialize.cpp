#include "kkweyl/serialize.hpp"

#include "kkweyl/demazure_hecke.hpp"
#include "kkweyl/report.hpp"

#include <algorithm>

namespace kkweyl {

using nlohmann::json;

json weight_json(const IntVector& w) {
  json out = json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

json word_json(const Word& word) {
  json out = json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

json character_json(const RootSystem& rs, const Character& chi) {
  json terms = json::array();
  for (const auto& [mu, c] : chi) {
    terms.push_back({{"weight", weight_json(mu)}, {"mult", c.str()}});
  }
  return {{"type", rs.label().str()}, {"terms", std::move(terms)}};
}

Character character_from_json(const RootSystem& rs, const json& doc) {
  try {
    if (doc.at("type").get<std::string>() != rs.label().str()) {
      throw InputError("character type does not match " + rs.label().str());
    }
    Character chi(rs.rank());
    for (const auto& term : doc.at("terms")) {
      const auto coords = term.at("weight").get<std::vector<int>>();
      if (static_cast<int>(coords.size()) != rs.rank()) throw InputError("weight has wrong rank");
      Weight mu(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) mu[i] = coords[static_cast<std::size_t>(i)];
      chi.add_term(mu, BigInt(term.at("mult").get<std::string>()));
    }
    return chi;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed character JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError(std::string("malformed character JSON: ") + e.what());
  }
}

json expression_json(const DemazureExpression& expr) {
  const WeylGroup& W = expr.group();
  std::vector<int> ids;
  for (const auto& [w, f] : expr.terms()) ids.push_back(w);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const auto& wa = W.element(a);
    const auto& wb = W.element(b);
    if (wa.length != wb.length) return wa.length < wb.length;
    return wa.reduced_word < wb.reduced_word;
  });
  json terms = json::array();
  for (int w : ids) {
    terms.push_back({{"word", word_json(W.element(w).reduced_word)},
                     {"coeff", character_json(W.root_system(), expr.terms().at(w))}});
  }
  return {{"type", W.root_system().label().str()}, {"terms", std::move(terms)}};
}

std::string format_character(const Character& chi) {
  std::string out = "{";
  bool first = true;
  for (const auto& [mu, c] : chi) {
    if (!first) out += ", ";
    first = false;
    out += format_weight(mu) + ":" + c.str();
  }
  return out + "}";
}

json to_json(const WeylReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check}, {"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"suite", report.suite},   {"type", report.type},     {"trials", report.trials},
          {"seed", report.seed},     {"checks", report.checks}, {"failures", std::move(failures)}};
}

}  // namespace kkweyl
