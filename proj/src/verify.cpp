#include "kkweyl/verify.hpp"

#include "kkweyl/demazure_hecke.hpp"
#include "kkweyl/oracles.hpp"
#include "kkweyl/weyl_formula.hpp"

#include <algorithm>

namespace kkweyl {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"weyl-kk", "w-lambda",  "braid",
                                              "demazure", "word-independence", "ideal",
                                              "adjoint", "oracle",    "hecke-confluence"};
  return names;
}

bool is_suite_name(const std::string& name) {
  return name == "all" ||
         std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

namespace {

// Exhaustive reduced-word closure is cheap up to rank 3.
std::size_t word_limit(const WeylGroup& W) { return W.rank() <= 3 ? 100000 : 20; }

WeylReport run_one(const WeylGroup& W, const std::string& name, const SuiteOptions& o) {
  const int dominant_max = std::min(o.max_coord, 2);
  WeylReport r;
  if (name == "weyl-kk") {
    r = verify_weyl_kk(W, o.trials, o.seed, o.max_coord, std::max<std::size_t>(1, o.trials / 4),
                       dominant_max);
    r.merge(check_intertwiner_homomorphism(W, o.trials, o.seed));
  } else if (name == "w-lambda") {
    r = check_w_action_lambda(W, o.trials, o.seed);
  } else if (name == "braid") {
    r = verify_braid(W, o.trials, o.seed);
  } else if (name == "demazure") {
    r = verify_demazure_weyl(W, word_limit(W), o.seed, dominant_max);
  } else if (name == "word-independence") {
    r = verify_word_independence(W, o.trials, o.seed);
  } else if (name == "ideal") {
    r = verify_ideal_lemma(W, word_limit(W), o.seed);
  } else if (name == "adjoint") {
    r = check_adjointness(W, o.trials, o.seed, o.max_coord);
  } else if (name == "oracle") {
    r = verify_oracles(W, std::min<std::size_t>(o.trials, 20), o.seed, dominant_max);
  } else if (name == "hecke-confluence") {
    r = verify_hecke(W, o.trials, o.seed);
  } else {
    throw InputError("unknown suite '" + name + "'");
  }
  r.suite = name;
  r.trials = o.trials;
  r.seed = o.seed;
  return r;
}

}  // namespace

std::vector<WeylReport> run_suites(const WeylGroup& W, const std::string& name,
                                   const SuiteOptions& options) {
  if (!is_suite_name(name)) throw InputError("unknown suite '" + name + "'");
  std::vector<WeylReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_one(W, s, options));
  } else {
    out.push_back(run_one(W, name, options));
  }
  return out;
}

}  // namespace kkweyl
