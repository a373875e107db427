#include "beldec/fusion.hpp"

#include <algorithm>
#include <map>

#include "beldec/errors.hpp"

namespace beldec {

namespace {

void check_same_model(const MassFunction& m1, const MassFunction& m2, const HybridModel& model) {
  if (!(m1.model() == model) || !(m2.model() == model))
    throw ValidationError("fusion operands were built over different models");
}

}  // namespace

std::vector<MassEntry> dsmc_combine(const MassFunction& m1, const MassFunction& m2,
                                    const HybridModel& model) {
  check_same_model(m1, m2, model);
  std::map<PartSet, double> acc;
  for (const auto& x : m1.focal_elements())
    for (const auto& y : m2.focal_elements())
      acc[x.element.intersect(y.element)] += x.value * y.value;
  std::vector<MassEntry> out;
  out.reserve(acc.size());
  for (const auto& [k, v] : acc)
    out.push_back({k, v, element_label(model.frame(), k)});
  return out;
}

MassFunction pcr5_redistribute(const MassFunction& m1, const MassFunction& m2,
                               const std::vector<MassEntry>& dsmc, const HybridModel& model,
                               std::vector<ConflictShare>* log) {
  check_same_model(m1, m2, model);
  std::map<PartSet, MassEntry> acc;
  auto add = [&](const PartSet& elem, const std::string& label, double v) {
    auto it = acc.find(elem);
    if (it == acc.end())
      acc.emplace(elem, MassEntry{elem, v, label});
    else
      it->second.value += v;
  };
  // Non-conflicting combined mass passes through unchanged.
  for (const auto& e : dsmc)
    if (!model.model_empty(e.element)) add(e.element, e.label, e.value);
  // Each conflicting product goes back to its two generators.
  for (const auto& x : m1.focal_elements()) {
    for (const auto& y : m2.focal_elements()) {
      if (!model.model_empty(x.element.intersect(y.element))) continue;
      const double p = x.value * y.value;
      const double den = x.value + y.value;
      if (p <= 0.0 || den <= 0.0) continue;
      const double to_x = p * x.value / den;
      const double to_y = p * y.value / den;
      add(x.element, x.label, to_x);
      add(y.element, y.label, to_y);
      if (log) log->push_back({x.element, y.element, x.label, y.label, p, to_x, to_y});
    }
  }
  std::vector<MassEntry> entries;
  entries.reserve(acc.size());
  for (auto& [k, e] : acc) entries.push_back(std::move(e));
  return MassFunction::from_assignments(
      model, std::move(entries), "PCR5(" + m1.source() + "," + m2.source() + ")");
}

FusionResult fuse_two(const MassFunction& m1, const MassFunction& m2, const HybridModel& model) {
  FusionResult r;
  r.dsmc = dsmc_combine(m1, m2, model);
  r.pcr5 = pcr5_redistribute(m1, m2, r.dsmc, model, &r.conflict_log);
  return r;
}

MassFunction fuse_many(const std::vector<MassFunction>& sources, const HybridModel& model) {
  if (sources.empty()) throw ValidationError("fuse_many: no sources");
  MassFunction acc = sources.front();
  for (std::size_t i = 1; i < sources.size(); ++i)
    acc = fuse_two(acc, sources[i], model).pcr5;
  return acc;
}

double dsmc_mass_of(const std::vector<MassEntry>& dsmc, const PartSet& element) {
  for (const auto& e : dsmc)
    if (e.element == element) return e.value;
  return 0.0;
}

}  // namespace beldec
