#pragma once

#include <string>
#include <vector>

#include "virmod/check.hpp"

namespace virmod::suite {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Coprime (p, q), both orders, p != q, p, q >= 2, pq <= limit.
std::vector<std::pair<int, int>> models_up_to(long pq_limit);

CriterionResult modular_relations();
CriterionResult convention_certification();
CriterionResult catalog_verification();
CriterionResult classification_search();
CriterionResult branching_identity();
CriterionResult extension_integrality();
CriterionResult extension_invariant_matching();
CriterionResult fusion_rules();
CriterionResult character_oracle();

std::vector<CriterionResult> run_all();

}  // namespace virmod::suite
