#pragma once

#include <string>
#include <vector>

#include "beldec/decision.hpp"
#include "beldec/io.hpp"
#include "beldec/staging.hpp"

namespace beldec {

struct PipelineReport {
  StagePlan plan;
  std::vector<StageResult> stages;
  CombinedResult combined;

  bool has_bn = false;
  std::string bn_binding;
  Evidence bn_evidence;
  Marginals bn_marginals;

  std::vector<RankedDecision> decisions;
  // One ranked section per reason node, in network declaration order.
  std::vector<std::pair<std::string, std::vector<RankedDecision>>> bn_sections;
};

// Staging -> aggregation -> Bayesian network -> ranking. Layer failures are
// rethrown with the layer named.
PipelineReport run_pipeline(const io::PipelineConfig& cfg);

std::string render_pipeline_text(const io::PipelineConfig& cfg, const PipelineReport& report);
io::json render_pipeline_json(const io::PipelineConfig& cfg, const PipelineReport& report);

}  // namespace beldec
