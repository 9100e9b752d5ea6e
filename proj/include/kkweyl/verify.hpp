#pragma once

#include "kkweyl/report.hpp"
#include "kkweyl/weyl_group.hpp"

#include <string>
#include <vector>

namespace kkweyl {

struct SuiteOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  int max_coord = 3;
};

/// weyl-kk, w-lambda, braid, demazure, word-independence, ideal, adjoint,
/// oracle, hecke-confluence (in that order); "all" selects every one.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite, or all of them for "all". Throws InputError for an
/// unknown name.
std::vector<WeylReport> run_suites(const WeylGroup& W, const std::string& name,
                                   const SuiteOptions& options);

}  // namespace kkweyl
