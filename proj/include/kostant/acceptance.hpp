#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kostant::acceptance {

struct Options {
  int max_brute_rank = 7;     // full Weyl group sweeps over interval roots
  int max_weyl_image_rank = 4;
  int max_closed_rank = 25;   // closed-form multiplicity sweep
  int max_cardinality_rank = 16;
  int max_interval_partition_rank = 10;
  int max_closed_term_rank = 9;
  int max_length_count_rank = 14;
  int max_zero_weight_rank = 6;
  int max_identity_n = 30;
  int max_subset_n = 16;
  int random_weights = 200;
  std::uint64_t seed = 20240917;
  int brute_cap = 8;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using Progress = std::function<void(const CriterionResult&)>;

/// Runs every criterion in order; progress (if set) is called after each one.
std::vector<CriterionResult> run_all(const Options& options, const Progress& progress = {});

/// Individual criteria, numbered as in run_all.
CriterionResult alternation_set_equality(const Options& options);
CriterionResult fibonacci_cardinality(const Options& options);
CriterionResult q_multiplicity_kwmf(const Options& options);
CriterionResult q_multiplicity_closed_forms(const Options& options);
CriterionResult multiplicity_one(const Options& options);
CriterionResult interval_partition_closed_form(const Options& options);
CriterionResult closed_terms_match_partition(const Options& options);
CriterionResult partition_oracle_equivalence(const Options& options);
CriterionResult combinatorial_identity(const Options& options);
CriterionResult length_counts(const Options& options);
CriterionResult zero_weight_exponents(const Options& options);

std::string format_line(const CriterionResult& result);

}  // namespace kostant::acceptance
