#pragma once

#include <string>
#include <utility>
#include <vector>

#include "beldec/element.hpp"
#include "beldec/fusion.hpp"
#include "beldec/pignistic.hpp"

namespace beldec {

// One three-hypothesis subproblem. The first member of every stage after the
// first is the previous stage's winner, unknown until that stage has run.
struct StageSpec {
  bool carries_winner = false;          // first member is the carried winner
  std::vector<std::string> residues;    // fresh hypotheses of this stage
  // Members with the winner resolved; for stage 1 this is just the triple.
  std::vector<std::string> members(const std::string& winner = "") const;
};

struct StagePlan {
  std::vector<StageSpec> stages;
  int subproblems = 0;   // k: number of full three-dimensional subproblems
  int residue_count = 0; // r = n mod 3
  // n < 3: no partitioning needed, the single stage is the whole frame.
  bool single_stage_fallback = false;
};

// Raw per-source assignments for one stage, before the stage model exists.
struct BbaSpec {
  std::string source;
  std::vector<std::pair<ElementSpec, double>> entries;
};

struct StageResult {
  Frame subframe{std::vector<std::string>{"?"}};
  HybridModel model;
  MassFunction source1, source2;
  FusionResult fusion;
  // The stage's belief row over the standard propositions (zeros included).
  std::vector<std::pair<std::string, double>> belief_table;
  std::vector<BetPEntry> betp_table;
  std::string winner;
};

struct CombinedResult {
  // Per proposition label, the maximum across stages.
  std::vector<std::pair<std::string, double>> beliefs;
  std::vector<std::pair<std::string, double>> betp;
  std::string winner;  // argmax of aggregated BetP over singletons
};

// First stage takes the first three hypotheses in declared order; each later
// stage carries the previous winner plus the next (up to) two unused ones.
StagePlan plan_stages(const Frame& frame, const std::vector<ElementSpec>& constraints);

// Builds the stage subframe and model (constraints restricted to the stage's
// hypotheses), fuses the two sources and selects the stage winner.
StageResult run_stage(const std::vector<std::string>& members,
                      const std::vector<ElementSpec>& constraints,
                      const BbaSpec& source1, const BbaSpec& source2);

// Union of all stage columns; shared propositions take the maximum value.
// Tables are reported raw, without renormalization.
CombinedResult combine_stages(const std::vector<StageResult>& results);

}  // namespace beldec
