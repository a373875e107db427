#include "beldec/io.hpp"

#include <filesystem>
#include <fstream>

#include "beldec/errors.hpp"

namespace beldec::io {

namespace fs = std::filesystem;

namespace {

// Shape errors from the JSON layer surface as validation failures, the same
// as our own structural checks.
template <typename Fn>
auto as_validation(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("file '" + path + "': " + e.what());
  }
}

HybridModel FrameDoc::make_model() const {
  std::vector<PartSet> cs;
  for (const auto& c : constraints) cs.push_back(c.eval(frame));
  return apply_constraints(frame, cs);
}

FrameDoc parse_frame(const json& j) {
  return as_validation("frame document", [&] {
    if (!j.is_object() || !j.contains("hypotheses"))
      throw ValidationError("frame document needs a 'hypotheses' list");
    FrameDoc doc;
    doc.frame = Frame(j.at("hypotheses").get<std::vector<std::string>>());
    if (j.contains("empty"))
      for (const auto& c : j.at("empty")) doc.constraints.push_back(parse_element(c));
    for (const auto& c : doc.constraints)
      for (const auto& n : c.atom_names())
        if (!doc.frame.index_of(n))
          throw ValidationError("constraint mentions unknown hypothesis '" + n + "'");
    return doc;
  });
}

ElementSpec parse_element(const json& j) {
  if (j.is_string()) return ElementSpec::atom(j.get<std::string>());
  if (j.is_array()) {
    std::vector<ElementSpec> args;
    for (const auto& a : j) args.push_back(parse_element(a));
    if (args.empty()) throw ValidationError("element expression must not be empty");
    return ElementSpec::intersect(std::move(args));
  }
  if (j.is_object()) {
    if (j.contains("intersect")) {
      std::vector<ElementSpec> args;
      for (const auto& a : j.at("intersect")) args.push_back(parse_element(a));
      if (args.empty()) throw ValidationError("'intersect' must not be empty");
      return ElementSpec::intersect(std::move(args));
    }
    if (j.contains("union")) {
      std::vector<ElementSpec> args;
      for (const auto& a : j.at("union")) args.push_back(parse_element(a));
      if (args.empty()) throw ValidationError("'union' must not be empty");
      return ElementSpec::unite(std::move(args));
    }
    if (j.contains("parts")) {
      ElementSpec e;
      e.kind = ElementSpec::Kind::Parts;
      e.parts = j.at("parts").get<std::vector<std::vector<std::string>>>();
      return e;
    }
  }
  throw ValidationError("unrecognized element expression: " + j.dump());
}

json element_to_json(const ElementSpec& e) {
  switch (e.kind) {
    case ElementSpec::Kind::Atom:
      return json::array({e.name});
    case ElementSpec::Kind::Intersect: {
      json args = json::array();
      for (const auto& a : e.args) args.push_back(element_to_json(a));
      return json{{"intersect", args}};
    }
    case ElementSpec::Kind::Union: {
      json args = json::array();
      for (const auto& a : e.args) args.push_back(element_to_json(a));
      return json{{"union", args}};
    }
    case ElementSpec::Kind::Parts:
      return json{{"parts", e.parts}};
  }
  return nullptr;
}

json element_to_json(const Frame& frame, const PartSet& elem) {
  auto names_of = [&](Part s) {
    std::vector<std::string> names;
    for (int i = 1; i <= frame.size(); ++i)
      if (s & (Part{1} << (i - 1))) names.push_back(frame.label(i));
    return names;
  };
  if (auto s = as_atom_intersection(frame, elem)) {
    const auto names = names_of(*s);
    if (names.size() == 1) return json::array({names[0]});
    return json{{"intersect", names}};
  }
  if (auto s = as_atom_union(frame, elem)) return json{{"union", names_of(*s)}};
  json parts = json::array();
  for (Part p : elem.parts()) parts.push_back(names_of(p));
  return json{{"parts", parts}};
}

BbaSpec parse_bba(const json& j) {
  return as_validation("bba document", [&] {
    if (!j.is_object() || !j.contains("masses") || !j.at("masses").is_array())
      throw ValidationError("bba document needs a 'masses' list");
    BbaSpec spec;
    spec.source = j.value("source", "");
    for (const auto& entry : j.at("masses")) {
      if (!entry.is_object() || !entry.contains("element") || !entry.contains("value"))
        throw ValidationError("each mass entry needs 'element' and 'value'");
      spec.entries.emplace_back(parse_element(entry.at("element")),
                                entry.at("value").get<double>());
    }
    return spec;
  });
}

json mass_to_json(const MassFunction& m) {
  json masses = json::array();
  for (const auto& e : m.focal_elements())
    masses.push_back({{"element", element_to_json(m.model().frame(), e.element)},
                      {"label", e.label},
                      {"value", e.value}});
  return json{{"source", m.source()}, {"masses", masses}};
}

json fusion_to_json(const Frame& frame, const FusionResult& r) {
  json dsmc = json::array();
  for (const auto& e : r.dsmc)
    dsmc.push_back({{"element", element_to_json(frame, e.element)},
                    {"label", e.label},
                    {"value", e.value}});
  json log = json::array();
  for (const auto& c : r.conflict_log)
    log.push_back({{"x", c.x_label},
                   {"y", c.y_label},
                   {"product", c.product},
                   {"share_to_x", c.to_x},
                   {"share_to_y", c.to_y}});
  return json{{"dsmc", dsmc}, {"pcr5", mass_to_json(r.pcr5)}, {"conflict_log", log}};
}

Network parse_network(const json& j) {
  return as_validation("network document", [&] {
    if (!j.is_object() || !j.contains("nodes"))
      throw ValidationError("network document needs a 'nodes' list");
    std::vector<BnNode> nodes;
    for (const auto& n : j.at("nodes")) {
      BnNode node;
      node.name = n.at("name").get<std::string>();
      node.states = n.at("states").get<std::vector<std::string>>();
      if (n.contains("parents")) node.parents = n.at("parents").get<std::vector<std::string>>();
      node.cpt = n.at("cpt").get<std::vector<std::vector<double>>>();
      nodes.push_back(std::move(node));
    }
    return Network(std::move(nodes));
  });
}

json network_to_json(const Network& net) {
  json nodes = json::array();
  for (const auto& n : net.nodes())
    nodes.push_back(
        {{"name", n.name}, {"states", n.states}, {"parents", n.parents}, {"cpt", n.cpt}});
  return json{{"nodes", nodes}};
}

Evidence parse_evidence(const json& j) {
  return as_validation("evidence document", [&] {
    Evidence ev;
    if (j.contains("hard"))
      ev.hard = j.at("hard").get<std::map<std::string, std::string>>();
    if (j.contains("soft"))
      ev.soft = j.at("soft").get<std::map<std::string, std::vector<double>>>();
    return ev;
  });
}

json marginals_to_json(const Network& net, const Marginals& m) {
  json out = json::object();
  for (const auto& node : net.nodes()) {
    const auto it = m.find(node.name);
    if (it == m.end()) continue;
    json dist = json::object();
    for (std::size_t s = 0; s < node.states.size(); ++s) dist[node.states[s]] = it->second[s];
    out[node.name] = dist;
  }
  return out;
}

namespace {

PipelineConfig load_pipeline_config_impl(const std::string& path) {
  const json j = load_json_file(path);
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& ref) { return (base / ref).string(); };

  PipelineConfig cfg;
  if (j.contains("frame_file"))
    cfg.frame = parse_frame(load_json_file(resolve(j.at("frame_file").get<std::string>())));
  else if (j.contains("frame"))
    cfg.frame = parse_frame(j.at("frame"));
  else
    throw ValidationError("pipeline config needs 'frame' or 'frame_file'");

  if (!j.contains("stages") || !j.at("stages").is_array() || j.at("stages").empty())
    throw ValidationError("pipeline config needs a non-empty 'stages' list");
  for (const auto& s : j.at("stages")) {
    if (!s.contains("s1") || !s.contains("s2"))
      throw ValidationError("each stage needs bba files 's1' and 's2'");
    cfg.stage_sources.emplace_back(
        parse_bba(load_json_file(resolve(s.at("s1").get<std::string>()))),
        parse_bba(load_json_file(resolve(s.at("s2").get<std::string>()))));
  }

  if (j.contains("bn")) {
    const auto& b = j.at("bn");
    cfg.has_bn = true;
    cfg.bn = parse_network(load_json_file(resolve(b.at("file").get<std::string>())));
    cfg.bn_input_node = b.at("input_node").get<std::string>();
    cfg.bn_binding = b.value("binding", "hard");
    if (cfg.bn_binding != "hard" && cfg.bn_binding != "soft")
      throw ValidationError("bn binding must be 'hard' or 'soft'");
  }

  if (j.contains("output")) {
    const auto& o = j.at("output");
    cfg.round_digits = o.value("round", 3);
    cfg.format = o.value("format", "table");
    cfg.include_composites = o.value("include_composites", false);
    if (cfg.format != "table" && cfg.format != "json")
      throw ValidationError("output format must be 'table' or 'json'");
  }
  return cfg;
}

}  // namespace

PipelineConfig load_pipeline_config(const std::string& path) {
  return as_validation("pipeline config", [&] { return load_pipeline_config_impl(path); });
}

}  // namespace beldec::io
