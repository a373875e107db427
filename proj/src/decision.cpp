#include "beldec/decision.hpp"

#include <algorithm>

namespace beldec {

std::vector<RankedDecision> rank_entries(std::vector<std::pair<std::string, double>> entries,
                                         std::string provenance) {
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<RankedDecision> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.push_back({static_cast<int>(i) + 1, entries[i].first, entries[i].second, provenance});
  return out;
}

}  // namespace beldec
