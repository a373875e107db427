#pragma once

#include <string>
#include <vector>

#include "beldec/mass.hpp"

namespace beldec {

// One conflicting product and how it was split back onto its generators.
struct ConflictShare {
  PartSet x, y;
  std::string x_label, y_label;
  double product = 0.0;
  double to_x = 0.0;
  double to_y = 0.0;
};

struct FusionResult {
  // Conjunctive combination in the free part algebra. Keys constrained empty
  // by the model are retained here as labeled conflict carriers.
  std::vector<MassEntry> dsmc;
  // After proportional conflict redistribution; model-empty elements carry 0.
  MassFunction pcr5;
  std::vector<ConflictShare> conflict_log;
};

// m(X)·m(Y) products accumulated on canonical(X∩Y), free-model algebra.
std::vector<MassEntry> dsmc_combine(const MassFunction& m1, const MassFunction& m2,
                                    const HybridModel& model);

// Two-source PCR5: every product landing on a model-empty element goes back to
// its two generators, proportionally to their masses.
MassFunction pcr5_redistribute(const MassFunction& m1, const MassFunction& m2,
                               const std::vector<MassEntry>& dsmc, const HybridModel& model,
                               std::vector<ConflictShare>* log = nullptr);

FusionResult fuse_two(const MassFunction& m1, const MassFunction& m2, const HybridModel& model);

// Pairwise left-to-right fold. PCR5 is not associative, so the result depends
// on the order of the list; two-source fusion is the primary mode.
MassFunction fuse_many(const std::vector<MassFunction>& sources, const HybridModel& model);

double dsmc_mass_of(const std::vector<MassEntry>& dsmc, const PartSet& element);

}  // namespace beldec
