#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treespectra/tree.hpp"

namespace treespectra {

struct CheckResult {
  std::string id;        // stable check identifier, e.g. "min4pc.inertia"
  std::string inputs;    // everything needed to reproduce (tree, f, seeds, ...)
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  std::optional<VertexPair> explicit_f;  // restrict min4pc checks to this f
  bool all_f = false;           // run min4pc checks for every valid f, not just the first
  bool spot_checks = false;     // randomized hypermetric / negative-type checks
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  int entry_bound = 3;
};

/// Theorem suite for one tree: four-point condition, matrix identities,
/// inertia, closed forms, sign pattern, unimodality / log-concavity, peak
/// bounds where applicable, v-vector identities, and the l1 embedding.
std::vector<CheckResult> verify_tree(const Tree& t, const VerifyOptions& opt);

/// Family-specific claims on top of the generic suite.
std::vector<CheckResult> verify_star(int n);
std::vector<CheckResult> verify_bistar(int n);
std::vector<CheckResult> verify_path(int n);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace treespectra
