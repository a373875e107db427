#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beldec/errors.hpp"
#include "beldec/pipeline.hpp"
#include "beldec/report.hpp"

namespace {

using namespace beldec;

// "E", "E&F" (intersection), "E|F" (union of '&'-groups). No parentheses.
ElementSpec parse_prop(const std::string& text) {
  std::vector<ElementSpec> unions;
  std::stringstream outer(text);
  std::string group;
  while (std::getline(outer, group, '|')) {
    std::vector<std::string> names;
    std::stringstream inner(group);
    std::string name;
    while (std::getline(inner, name, '&'))
      if (!name.empty()) names.push_back(name);
    if (names.empty()) throw ValidationError("empty proposition in '" + text + "'");
    unions.push_back(ElementSpec::intersect_atoms(names));
  }
  if (unions.empty()) throw ValidationError("empty proposition '" + text + "'");
  return ElementSpec::unite(std::move(unions));
}

std::vector<Proposition> fusion_columns(const HybridModel& model) {
  // Past four hypotheses the standard column set explodes; fall back to the
  // singletons only.
  if (model.frame().size() <= 4) return standard_propositions(model.frame());
  return singleton_propositions(model.frame());
}

int cmd_dpow(const std::string& frame_file, int round_digits, const std::string& format) {
  const auto doc = io::parse_frame(io::load_json_file(frame_file));
  const auto model = doc.make_model();
  const auto elems = enumerate_hyper_power_set(model);
  if (format == "json") {
    io::json out = io::json::array();
    for (const auto& e : elems)
      out.push_back({{"label", element_label(model, e)},
                     {"cardinality", model.cardinality(e)}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 7;  // "Element"
  std::vector<std::string> labels;
  for (const auto& e : elems) {
    labels.push_back(element_label(model, e));
    std::size_t w = 0;
    for (unsigned char c : labels.back())
      if ((c & 0xC0) != 0x80) ++w;
    width = std::max(width, w);
  }
  (void)round_digits;
  std::cout << "Element";
  for (std::size_t i = 7; i < width; ++i) std::cout << ' ';
  std::cout << "  C_M\n";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::size_t w = 0;
    for (unsigned char c : labels[i])
      if ((c & 0xC0) != 0x80) ++w;
    std::cout << labels[i];
    for (std::size_t k = w; k < width; ++k) std::cout << ' ';
    std::cout << "  " << model.cardinality(elems[i]) << "\n";
  }
  return 0;
}

MassFunction load_mass(const HybridModel& model, const std::string& bba_file) {
  const auto spec = io::parse_bba(io::load_json_file(bba_file));
  std::vector<MassEntry> entries;
  for (const auto& [expr, value] : spec.entries)
    entries.push_back({expr.eval(model.frame()), value, expr.label()});
  return MassFunction::from_assignments(model, std::move(entries),
                                        spec.source.empty() ? bba_file : spec.source);
}

int cmd_fuse(const std::string& frame_file, const std::string& bba1, const std::string& bba2,
             int round_digits, const std::string& format) {
  const auto doc = io::parse_frame(io::load_json_file(frame_file));
  const auto model = doc.make_model();
  const MassFunction m1 = load_mass(model, bba1);
  const MassFunction m2 = load_mass(model, bba2);
  const FusionResult r = fuse_two(m1, m2, model);
  if (format == "json") {
    std::cout << io::fusion_to_json(model.frame(), r).dump(2) << "\n";
    return 0;
  }
  const auto props = fusion_columns(model);
  std::vector<std::string> cols;
  std::vector<double> s1, s2, dsmc, pcr5;
  for (const auto& [elem, label] : props) {
    cols.push_back(label);
    s1.push_back(m1.mass_of(elem));
    s2.push_back(m2.mass_of(elem));
    dsmc.push_back(dsmc_mass_of(r.dsmc, elem));
    pcr5.push_back(r.pcr5.mass_of(elem));
  }
  std::cout << render_table(cols,
                            {{"m(" + m1.source() + ")", s1},
                             {"m(" + m2.source() + ")", s2},
                             {"mDSmC", dsmc},
                             {"mPCR5", pcr5}},
                            round_digits);
  return 0;
}

int cmd_betp(const std::string& frame_file, const std::string& bba_file,
             const std::vector<std::string>& prop_args, int round_digits,
             const std::string& format) {
  const auto doc = io::parse_frame(io::load_json_file(frame_file));
  const auto model = doc.make_model();
  const MassFunction m = load_mass(model, bba_file);
  std::vector<Proposition> props;
  if (prop_args.empty()) {
    props = fusion_columns(model);
  } else {
    for (const auto& p : prop_args) {
      const ElementSpec spec = parse_prop(p);
      props.emplace_back(spec.eval(model.frame()), spec.label());
    }
  }
  const auto table = betp_table(m, model, props);
  if (format == "json") {
    io::json out = io::json::array();
    for (const auto& e : table) out.push_back({{"label", e.label}, {"value", e.probability}});
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> cols;
  std::vector<double> vals;
  for (const auto& e : table) {
    cols.push_back(e.label);
    vals.push_back(e.probability);
  }
  std::cout << render_table(cols, {{"BetP", vals}}, round_digits);
  return 0;
}

int cmd_bn_infer(const std::string& network_file, const std::string& evidence_file,
                 int round_digits, const std::string& format) {
  const Network net = io::parse_network(io::load_json_file(network_file));
  validate_or_throw(net);
  Evidence ev;
  if (!evidence_file.empty()) ev = io::parse_evidence(io::load_json_file(evidence_file));
  const Marginals m = infer(net, ev);
  if (format == "json") {
    std::cout << io::marginals_to_json(net, m).dump(2) << "\n";
    return 0;
  }
  for (const auto& node : net.nodes()) {
    std::cout << node.name << ":";
    const auto& dist = m.at(node.name);
    for (std::size_t s = 0; s < node.states.size(); ++s)
      std::cout << " " << node.states[s] << "=" << fmt_fixed(dist[s], round_digits);
    std::cout << "\n";
  }
  return 0;
}

int cmd_pipeline(const std::string& config_file, const std::string& format_override,
                 int round_override, bool include_composites) {
  io::PipelineConfig cfg = io::load_pipeline_config(config_file);
  if (!format_override.empty()) cfg.format = format_override;
  if (round_override >= 0) cfg.round_digits = round_override;
  if (include_composites) cfg.include_composites = true;
  const PipelineReport rep = run_pipeline(cfg);
  if (cfg.format == "json")
    std::cout << render_pipeline_json(cfg, rep).dump(2) << "\n";
  else
    std::cout << render_pipeline_text(cfg, rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief fusion and probabilistic decision support"};
  app.require_subcommand(1);

  std::string frame_file, bba1, bba2, bba_file, network_file, evidence_file, config_file;
  std::vector<std::string> prop_args;
  int round_digits = 3;
  int round_override = -1;
  std::string format = "table";
  std::string format_override;
  bool include_composites = false;

  auto* dpow = app.add_subcommand("dpow", "Enumerate the belief space with DSm cardinalities");
  dpow->add_option("frame", frame_file, "frame/constraint JSON file")->required();
  dpow->add_option("--round", round_digits, "display decimals");
  dpow->add_option("--format", format, "table|json");

  auto* fuse = app.add_subcommand("fuse", "Combine two bba files (DSmC + PCR5)");
  fuse->add_option("frame", frame_file, "frame/constraint JSON file")->required();
  fuse->add_option("bba1", bba1, "first bba JSON file")->required();
  fuse->add_option("bba2", bba2, "second bba JSON file")->required();
  fuse->add_option("--round", round_digits, "display decimals");
  fuse->add_option("--format", format, "table|json");

  auto* betp = app.add_subcommand("betp", "Pignistic probabilities of propositions");
  betp->add_option("frame", frame_file, "frame/constraint JSON file")->required();
  betp->add_option("bba", bba_file, "bba JSON file")->required();
  betp->add_option("--prop", prop_args, "proposition, e.g. E, E&F, E|F (repeatable)");
  betp->add_option("--round", round_digits, "display decimals");
  betp->add_option("--format", format, "table|json");

  auto* bn = app.add_subcommand("bn-infer", "Exact posterior marginals of a network");
  bn->add_option("network", network_file, "network JSON file")->required();
  bn->add_option("--evidence", evidence_file, "evidence JSON file");
  bn->add_option("--round", round_digits, "display decimals");
  bn->add_option("--format", format, "table|json");

  auto* pipeline = app.add_subcommand("pipeline", "Run the full decision pipeline");
  pipeline->add_option("config", config_file, "pipeline config JSON file")->required();
  pipeline->add_option("--round", round_override, "display decimals");
  pipeline->add_option("--format", format_override, "table|json");
  pipeline->add_flag("--include-composites", include_composites,
                     "rank intersections/unions too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dpow->parsed()) return cmd_dpow(frame_file, round_digits, format);
    if (fuse->parsed()) return cmd_fuse(frame_file, bba1, bba2, round_digits, format);
    if (betp->parsed()) return cmd_betp(frame_file, bba_file, prop_args, round_digits, format);
    if (bn->parsed()) return cmd_bn_infer(network_file, evidence_file, round_digits, format);
    if (pipeline->parsed())
      return cmd_pipeline(config_file, format_override, round_override, include_composites);
  } catch (const beldec::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
