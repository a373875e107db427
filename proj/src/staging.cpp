#include "beldec/staging.hpp"

#include <algorithm>

#include "beldec/errors.hpp"

namespace beldec {

std::vector<std::string> StageSpec::members(const std::string& winner) const {
  std::vector<std::string> out;
  if (carries_winner) {
    if (winner.empty())
      throw ComputeError("stage needs the previous winner but none was supplied");
    out.push_back(winner);
  }
  out.insert(out.end(), residues.begin(), residues.end());
  return out;
}

StagePlan plan_stages(const Frame& frame, const std::vector<ElementSpec>& constraints) {
  // Constraints are kept at name level and restricted per stage in run_stage;
  // they only shape the plan through the frame they mention.
  for (const auto& c : constraints)
    for (const auto& n : c.atom_names())
      if (!frame.index_of(n))
        throw ValidationError("constraint mentions unknown hypothesis '" + n + "'");

  StagePlan plan;
  const int n = frame.size();
  plan.subproblems = n / 3;
  plan.residue_count = n % 3;
  if (n < 3) {
    plan.single_stage_fallback = true;
    StageSpec s;
    s.residues = frame.labels();
    plan.stages.push_back(std::move(s));
    return plan;
  }
  StageSpec first;
  first.residues.assign(frame.labels().begin(), frame.labels().begin() + 3);
  plan.stages.push_back(std::move(first));
  for (int next = 3; next < n;) {
    StageSpec s;
    s.carries_winner = true;
    const int take = std::min(2, n - next);
    for (int i = 0; i < take; ++i) s.residues.push_back(frame.labels()[next + i]);
    next += take;
    plan.stages.push_back(std::move(s));
  }
  return plan;
}

namespace {

MassFunction build_mass(const HybridModel& model, const BbaSpec& spec) {
  std::vector<MassEntry> entries;
  for (const auto& [expr, value] : spec.entries)
    entries.push_back({expr.eval(model.frame()), value, expr.label()});
  return MassFunction::from_assignments(model, std::move(entries), spec.source);
}

}  // namespace

StageResult run_stage(const std::vector<std::string>& members,
                      const std::vector<ElementSpec>& constraints,
                      const BbaSpec& source1, const BbaSpec& source2) {
  StageResult r;
  r.subframe = Frame(members);
  std::vector<PartSet> restricted;
  for (const auto& c : constraints) {
    const auto names = c.atom_names();
    const bool applies = std::all_of(names.begin(), names.end(), [&](const std::string& n) {
      return r.subframe.index_of(n).has_value();
    });
    if (applies) restricted.push_back(c.eval(r.subframe));
  }
  r.model = apply_constraints(r.subframe, restricted);

  r.source1 = build_mass(r.model, source1);
  r.source2 = build_mass(r.model, source2);
  r.fusion = fuse_two(r.source1, r.source2, r.model);

  const auto props = standard_propositions(r.subframe);
  for (const auto& [elem, label] : props)
    r.belief_table.emplace_back(label, r.fusion.pcr5.mass_of(elem));
  r.betp_table = betp_table(r.fusion.pcr5, r.model, props);

  // Winner: argmax of PCR5 mass over singletons, ties broken lexicographically.
  double best = -1.0;
  for (int i = 1; i <= r.subframe.size(); ++i) {
    const double v = r.fusion.pcr5.mass_of(free_atom(r.subframe, i));
    const std::string& lbl = r.subframe.label(i);
    if (v > best || (v == best && lbl < r.winner)) {
      best = v;
      r.winner = lbl;
    }
  }
  return r;
}

CombinedResult combine_stages(const std::vector<StageResult>& results) {
  if (results.empty()) throw ValidationError("combine_stages: no stage results");
  CombinedResult out;

  auto aggregate = [&](auto&& per_stage_rows) {
    // Singletons first in order of appearance, then composite propositions
    // that carry any mass; shared labels take the maximum across stages.
    std::vector<std::pair<std::string, double>> singles, composites;
    auto bump = [](std::vector<std::pair<std::string, double>>& rows, const std::string& label,
                   double v) {
      for (auto& [l, cur] : rows)
        if (l == label) {
          cur = std::max(cur, v);
          return;
        }
      rows.emplace_back(label, v);
    };
    for (const auto& r : results) {
      std::vector<std::string> stage_singletons(r.subframe.labels());
      for (const auto& [label, value] : per_stage_rows(r)) {
        const bool is_single = std::find(stage_singletons.begin(), stage_singletons.end(),
                                         label) != stage_singletons.end();
        bump(is_single ? singles : composites, label, value);
      }
    }
    std::erase_if(composites, [](const auto& row) { return row.second == 0.0; });
    singles.insert(singles.end(), composites.begin(), composites.end());
    return singles;
  };

  out.beliefs = aggregate([](const StageResult& r) { return r.belief_table; });
  out.betp = aggregate([](const StageResult& r) {
    std::vector<std::pair<std::string, double>> rows;
    for (const auto& e : r.betp_table) rows.emplace_back(e.label, e.probability);
    return rows;
  });

  // Overall winner over aggregated singleton BetP.
  std::vector<std::string> all_singletons;
  for (const auto& r : results)
    for (const auto& l : r.subframe.labels())
      if (std::find(all_singletons.begin(), all_singletons.end(), l) == all_singletons.end())
        all_singletons.push_back(l);
  double best = -1.0;
  for (const auto& [label, value] : out.betp) {
    if (std::find(all_singletons.begin(), all_singletons.end(), label) == all_singletons.end())
      continue;
    if (value > best || (value == best && label < out.winner)) {
      best = value;
      out.winner = label;
    }
  }
  return out;
}

}  // namespace beldec
