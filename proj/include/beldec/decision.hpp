#pragma once

#include <string>
#include <utility>
#include <vector>

namespace beldec {

struct RankedDecision {
  int rank = 0;  // 1-based, contiguous
  std::string proposition;
  double score = 0.0;
  std::string provenance;  // "betp" or "bn-posterior"
};

// Scores sorted descending, ties broken lexicographically by proposition.
std::vector<RankedDecision> rank_entries(std::vector<std::pair<std::string, double>> entries,
                                         std::string provenance);

}  // namespace beldec
