#pragma once

#include <string>
#include <utility>
#include <vector>

#include "beldec/mass.hpp"

namespace beldec {

// Probability mass spread over the model's surviving Venn parts: each focal
// element X hands m(X)/C_M(X) to every one of its surviving parts.
struct PartDistribution {
  std::vector<std::pair<Part, double>> probs;  // sorted by part id
  double at(Part p) const;
};

struct BetPEntry {
  PartSet element;  // free-algebra form of the requested proposition
  std::string label;
  double probability = 0.0;
};

using Proposition = std::pair<PartSet, std::string>;

PartDistribution part_distribution(const MassFunction& m, const HybridModel& model);

// Pignistic probability of proposition `a`. Propositions constrained empty by
// the model report 0.
double betp(const MassFunction& m, const HybridModel& model, const PartSet& a);

std::vector<BetPEntry> betp_table(const MassFunction& m, const HybridModel& model,
                                  const std::vector<Proposition>& propositions);

// The case-study column layout: singletons, then intersections of every
// hypothesis combination by ascending size.
std::vector<Proposition> standard_propositions(const Frame& frame);
std::vector<Proposition> singleton_propositions(const Frame& frame);

}  // namespace beldec
