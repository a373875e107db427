#include "beldec/pignistic.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "beldec/errors.hpp"

namespace beldec {

double PartDistribution::at(Part p) const {
  auto it = std::lower_bound(probs.begin(), probs.end(), p,
                             [](const auto& e, Part v) { return e.first < v; });
  return (it != probs.end() && it->first == p) ? it->second : 0.0;
}

PartDistribution part_distribution(const MassFunction& m, const HybridModel& model) {
  if (!(m.model() == model))
    throw ValidationError("mass function was built over a different model");
  std::map<Part, double> acc;
  for (Part p : model.surviving().parts()) acc[p] = 0.0;
  for (const auto& e : m.focal_elements()) {
    const int c = model.cardinality(e.element);
    if (c == 0)
      throw ComputeError("focal element " + e.label + " has zero cardinality under the model");
    const double share = e.value / c;
    const PartSet masked = model.mask(e.element);
    for (Part p : masked.parts()) acc[p] += share;
  }
  PartDistribution d;
  d.probs.assign(acc.begin(), acc.end());
  return d;
}

double betp(const MassFunction& m, const HybridModel& model, const PartSet& a) {
  const PartDistribution d = part_distribution(m, model);
  double sum = 0.0;
  const PartSet masked = model.mask(a);
  for (Part p : masked.parts()) sum += d.at(p);
  return sum;
}

std::vector<BetPEntry> betp_table(const MassFunction& m, const HybridModel& model,
                                  const std::vector<Proposition>& propositions) {
  const PartDistribution d = part_distribution(m, model);
  std::vector<BetPEntry> out;
  out.reserve(propositions.size());
  for (const auto& [elem, label] : propositions) {
    double sum = 0.0;
    const PartSet masked = model.mask(elem);
    for (Part p : masked.parts()) sum += d.at(p);
    out.push_back({elem, label, sum});
  }
  return out;
}

std::vector<Proposition> singleton_propositions(const Frame& frame) {
  std::vector<Proposition> out;
  for (int i = 1; i <= frame.size(); ++i)
    out.emplace_back(free_atom(frame, i), frame.label(i));
  return out;
}

std::vector<Proposition> standard_propositions(const Frame& frame) {
  std::vector<Proposition> out = singleton_propositions(frame);
  const Part all = (Part{1} << frame.size()) - 1;
  std::vector<Part> combos;
  for (Part s = 1; s <= all; ++s)
    if (std::popcount(s) >= 2) combos.push_back(s);
  std::sort(combos.begin(), combos.end(), [](Part a, Part b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (Part s : combos) {
    PartSet elem;
    std::string label;
    bool first = true;
    for (int i = 1; i <= frame.size(); ++i) {
      if (!(s & (Part{1} << (i - 1)))) continue;
      const PartSet atom = free_atom(frame, i);
      elem = first ? atom : elem.intersect(atom);
      if (!first) label += "∩";
      label += frame.label(i);
      first = false;
    }
    out.emplace_back(std::move(elem), std::move(label));
  }
  return out;
}

}  // namespace beldec
