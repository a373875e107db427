#include "beldec/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "beldec/errors.hpp"
#include "beldec/report.hpp"

namespace beldec {

namespace {

template <typename Fn>
auto in_layer(const std::string& layer, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError(layer + ": " + e.what());
  } catch (const ComputeError& e) {
    throw ComputeError(layer + ": " + e.what());
  }
}

std::vector<std::pair<std::string, double>> combined_singletons(const io::PipelineConfig& cfg,
                                                                const CombinedResult& combined) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [label, value] : combined.betp)
    if (cfg.frame.frame.index_of(label)) out.emplace_back(label, value);
  return out;
}

}  // namespace

PipelineReport run_pipeline(const io::PipelineConfig& cfg) {
  PipelineReport rep;
  const Frame& frame = cfg.frame.frame;

  rep.plan = in_layer("staging layer", [&] { return plan_stages(frame, cfg.frame.constraints); });
  if (cfg.stage_sources.size() != rep.plan.stages.size()) {
    std::ostringstream msg;
    msg << "staging layer: config provides " << cfg.stage_sources.size()
        << " stage source pairs but the plan needs " << rep.plan.stages.size();
    throw ValidationError(msg.str());
  }

  std::string winner;
  for (std::size_t k = 0; k < rep.plan.stages.size(); ++k) {
    const std::string layer = "fusion layer (stage " + std::to_string(k + 1) + ")";
    StageResult r = in_layer(layer, [&] {
      return run_stage(rep.plan.stages[k].members(winner), cfg.frame.constraints,
                       cfg.stage_sources[k].first, cfg.stage_sources[k].second);
    });
    winner = r.winner;
    rep.stages.push_back(std::move(r));
  }

  rep.combined = in_layer("aggregation layer", [&] { return combine_stages(rep.stages); });

  if (cfg.has_bn) {
    rep.has_bn = true;
    rep.bn_binding = cfg.bn_binding;
    in_layer("bayesian-network layer", [&] {
      validate_or_throw(cfg.bn);
      if (cfg.bn_binding == "hard") {
        rep.bn_evidence.hard[cfg.bn_input_node] = rep.combined.winner;
      } else {
        rep.bn_evidence =
            bind_betp(cfg.bn, cfg.bn_input_node, combined_singletons(cfg, rep.combined));
      }
      rep.bn_marginals = infer(cfg.bn, rep.bn_evidence);
      return 0;
    });
  }

  in_layer("ranking layer", [&] {
    rep.decisions = rank_entries(
        cfg.include_composites ? rep.combined.betp : combined_singletons(cfg, rep.combined),
        "betp");
    if (rep.has_bn) {
      for (const auto& node : cfg.bn.nodes()) {
        if (node.name == cfg.bn_input_node) continue;
        std::vector<std::pair<std::string, double>> entries;
        const auto& dist = rep.bn_marginals.at(node.name);
        for (std::size_t s = 0; s < node.states.size(); ++s)
          entries.emplace_back(node.states[s], dist[s]);
        rep.bn_sections.emplace_back(node.name, rank_entries(std::move(entries), "bn-posterior"));
      }
    }
    return 0;
  });
  return rep;
}

namespace {

std::vector<std::string> prop_columns(const StageResult& r) {
  std::vector<std::string> cols;
  for (const auto& [label, value] : r.belief_table) cols.push_back(label);
  return cols;
}

std::vector<double> row_over_props(const StageResult& r, const MassFunction& m) {
  std::vector<double> vals;
  for (const auto& [elem, label] : standard_propositions(r.subframe))
    vals.push_back(m.mass_of(elem));
  return vals;
}

}  // namespace

std::string render_pipeline_text(const io::PipelineConfig& cfg, const PipelineReport& rep) {
  const int d = cfg.round_digits;
  std::ostringstream out;

  out << "Frame:";
  for (const auto& l : cfg.frame.frame.labels()) out << " " << l;
  out << "\n";
  if (!cfg.frame.constraints.empty()) {
    out << "Empty by constraint:";
    for (std::size_t i = 0; i < cfg.frame.constraints.size(); ++i)
      out << (i ? ", " : " ") << cfg.frame.constraints[i].label();
    out << "\n";
  }
  out << "Stages: " << rep.stages.size() << "\n";

  for (std::size_t k = 0; k < rep.stages.size(); ++k) {
    const StageResult& r = rep.stages[k];
    out << "\n== Stage " << (k + 1) << ":";
    for (const auto& l : r.subframe.labels()) out << " " << l;
    out << " ==\n";
    const auto cols = prop_columns(r);
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    rows.emplace_back("m(" + r.source1.source() + ")", row_over_props(r, r.source1));
    rows.emplace_back("m(" + r.source2.source() + ")", row_over_props(r, r.source2));
    std::vector<double> dsmc_vals, pcr5_vals, betp_vals;
    for (const auto& [elem, label] : standard_propositions(r.subframe))
      dsmc_vals.push_back(dsmc_mass_of(r.fusion.dsmc, elem));
    for (const auto& [label, value] : r.belief_table) pcr5_vals.push_back(value);
    for (const auto& e : r.betp_table) betp_vals.push_back(e.probability);
    rows.emplace_back("mDSmC", std::move(dsmc_vals));
    rows.emplace_back("mPCR5", std::move(pcr5_vals));
    rows.emplace_back("BetP", std::move(betp_vals));
    out << render_table(cols, rows, d);
    out << "Winner: " << r.winner << "\n";
  }

  {
    out << "\n== Combined beliefs ==\n";
    std::vector<std::string> cols;
    std::vector<double> vals;
    for (const auto& [label, value] : rep.combined.beliefs) {
      cols.push_back(label);
      vals.push_back(value);
    }
    out << render_table(cols, {{"mPCR5", vals}}, d);
    out << "\n== Combined BetP ==\n";
    cols.clear();
    vals.clear();
    for (const auto& [label, value] : rep.combined.betp) {
      cols.push_back(label);
      vals.push_back(value);
    }
    out << render_table(cols, {{"BetP", vals}}, d);
    out << "Overall winner: " << rep.combined.winner << "\n";
  }

  if (rep.has_bn) {
    out << "\n== Bayesian network ==\n";
    if (rep.bn_binding == "hard") {
      out << "Evidence: " << cfg.bn_input_node << " = " << rep.combined.winner << " (hard)\n";
    } else {
      out << "Evidence: " << cfg.bn_input_node << " ~ normalized BetP (soft)\n";
    }
    for (const auto& node : cfg.bn.nodes()) {
      const auto& dist = rep.bn_marginals.at(node.name);
      out << node.name << ":";
      for (std::size_t s = 0; s < node.states.size(); ++s)
        out << " " << node.states[s] << "=" << fmt_fixed(dist[s], d);
      out << "\n";
    }
  }

  out << "\n== Ranked decisions ==\n";
  for (const auto& dcsn : rep.decisions)
    out << dcsn.rank << ". " << dcsn.proposition << "  " << fmt_fixed(dcsn.score, d) << "  ("
        << dcsn.provenance << ")\n";
  for (const auto& [node, ranked] : rep.bn_sections) {
    out << "-- " << node << " --\n";
    for (const auto& dcsn : ranked)
      out << dcsn.rank << ". " << dcsn.proposition << "  " << fmt_fixed(dcsn.score, d) << "  ("
          << dcsn.provenance << ")\n";
  }
  return out.str();
}

io::json render_pipeline_json(const io::PipelineConfig& cfg, const PipelineReport& rep) {
  using io::json;
  json out;
  out["frame"] = cfg.frame.frame.labels();
  json constraints = json::array();
  for (const auto& c : cfg.frame.constraints) constraints.push_back(c.label());
  out["constraints"] = constraints;

  json stages = json::array();
  for (const auto& r : rep.stages) {
    json s;
    s["frame"] = r.subframe.labels();
    s["sources"] = json::array({io::mass_to_json(r.source1), io::mass_to_json(r.source2)});
    s["fusion"] = io::fusion_to_json(r.subframe, r.fusion);
    json betp = json::array();
    for (const auto& e : r.betp_table)
      betp.push_back({{"label", e.label}, {"value", e.probability}});
    s["betp"] = betp;
    s["winner"] = r.winner;
    stages.push_back(std::move(s));
  }
  out["stages"] = stages;

  auto rows_json = [](const std::vector<std::pair<std::string, double>>& rows) {
    json arr = json::array();
    for (const auto& [label, value] : rows) arr.push_back({{"label", label}, {"value", value}});
    return arr;
  };
  out["combined"] = {{"beliefs", rows_json(rep.combined.beliefs)},
                     {"betp", rows_json(rep.combined.betp)},
                     {"winner", rep.combined.winner}};

  if (rep.has_bn) {
    json bn;
    bn["binding"] = rep.bn_binding;
    if (rep.bn_binding == "hard")
      bn["evidence"] = {{"hard", rep.bn_evidence.hard}};
    else
      bn["evidence"] = {{"soft", rep.bn_evidence.soft}};
    bn["marginals"] = io::marginals_to_json(cfg.bn, rep.bn_marginals);
    out["bayesnet"] = bn;
  }

  json decisions = json::array();
  for (const auto& dcsn : rep.decisions)
    decisions.push_back({{"rank", dcsn.rank},
                         {"proposition", dcsn.proposition},
                         {"score", dcsn.score},
                         {"provenance", dcsn.provenance}});
  out["decisions"] = decisions;
  json sections = json::array();
  for (const auto& [node, ranked] : rep.bn_sections) {
    json sec;
    sec["node"] = node;
    json items = json::array();
    for (const auto& dcsn : ranked)
      items.push_back({{"rank", dcsn.rank},
                       {"proposition", dcsn.proposition},
                       {"score", dcsn.score},
                       {"provenance", dcsn.provenance}});
    sec["ranked"] = items;
    sections.push_back(std::move(sec));
  }
  out["bn_sections"] = sections;
  return out;
}

}  // namespace beldec
