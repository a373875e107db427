#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "beldec/bayesnet.hpp"
#include "beldec/element.hpp"
#include "beldec/fusion.hpp"
#include "beldec/staging.hpp"

namespace beldec::io {

using nlohmann::json;

// Reads and parses a JSON file; errors carry the file name.
json load_json_file(const std::string& path);

struct FrameDoc {
  Frame frame{std::vector<std::string>{"?"}};
  std::vector<ElementSpec> constraints;
  HybridModel make_model() const;
};

// {"hypotheses": ["E","F","G"], "empty": [["E","G"], ...]}
FrameDoc parse_frame(const json& j);

// A string, a list of atoms (their intersection), {"intersect":[...]},
// {"union":[...]} or {"parts":[["E","F"],...]}.
ElementSpec parse_element(const json& j);
json element_to_json(const ElementSpec& e);
// Shortest expression form of a free-algebra part set.
json element_to_json(const Frame& frame, const PartSet& elem);

// {"source":"S1","masses":[{"element":["E"],"value":0.51}, ...]}
BbaSpec parse_bba(const json& j);
json mass_to_json(const MassFunction& m);

json fusion_to_json(const Frame& frame, const FusionResult& r);

Network parse_network(const json& j);
json network_to_json(const Network& net);

// {"hard":{"node":"state"},"soft":{"node":[0.2, ...]}}
Evidence parse_evidence(const json& j);
json marginals_to_json(const Network& net, const Marginals& m);

struct PipelineConfig {
  FrameDoc frame;
  std::vector<std::pair<BbaSpec, BbaSpec>> stage_sources;  // (S1, S2) per stage
  bool has_bn = false;
  Network bn{std::vector<BnNode>{}};
  std::string bn_input_node;
  std::string bn_binding = "hard";  // hard | soft
  int round_digits = 3;
  std::string format = "table";  // table | json
  bool include_composites = false;
};

// Loads the config and every file it references (paths are taken relative to
// the config file's directory).
PipelineConfig load_pipeline_config(const std::string& path);

}  // namespace beldec::io
