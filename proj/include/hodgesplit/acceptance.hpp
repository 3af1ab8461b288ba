#pragma once

// The acceptance gate: one check per criterion, each returning a pass flag and a
// one-line summary of what was measured.  Shared by the acceptance binary and
// `hodgesplit verify-all`.

#include <cstdint>
#include <string>
#include <vector>

namespace hodgesplit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  /// Seed for the random profiles of criteria 4 and 5.
  std::uint64_t profile_seed = 20240;
  /// Base seed for the random exact triples of criterion 8 (seed + q per q).
  std::uint64_t triple_seed = 1000;
  int profiles = 50;
  int triples = 200;
};

CriterionResult local_h1(const Options& opt);
CriterionResult d_image(const Options& opt);
CriterionResult main_theorem(const Options& opt);
CriterionResult main_lemma(const Options& opt);
CriterionResult dimension_routes(const Options& opt);
CriterionResult normal_form(const Options& opt);
CriterionResult char2(const Options& opt);
CriterionResult modrep_properties(const Options& opt);
CriterionResult free_acyclicity(const Options& opt);

std::vector<CriterionResult> run_all(const Options& opt = {});

/// "PASS [1] name: detail (0.12 s)"
std::string format(const CriterionResult& r);

}  // namespace hodgesplit::acceptance
