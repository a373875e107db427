#include "beldec/mass.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "beldec/errors.hpp"

namespace beldec {

MassFunction MassFunction::from_assignments(const HybridModel& model,
                                            std::vector<MassEntry> entries,
                                            std::string source_label) {
  std::map<PartSet, MassEntry> merged;
  double sum = 0.0;
  for (auto& e : entries) {
    if (e.value < 0.0)
      throw ValidationError("bba '" + source_label + "': negative mass on " +
                            (e.label.empty() ? element_label(model.frame(), e.element) : e.label));
    if (e.value == 0.0) continue;
    if (e.element.empty())
      throw ValidationError("bba '" + source_label + "': mass on ∅ is not allowed (m(∅) = 0)");
    if (model.model_empty(e.element))
      throw ValidationError("bba '" + source_label + "': mass on constrained-empty element " +
                            (e.label.empty() ? element_label(model.frame(), e.element) : e.label));
    sum += e.value;
    auto [it, inserted] = merged.try_emplace(e.element, e);
    if (!inserted) it->second.value += e.value;
  }
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    std::ostringstream msg;
    msg << "bba '" << source_label << "' violates the mass constraints m(∅) = 0, Σ m(A) = 1: "
        << "masses sum to " << sum;
    throw ValidationError(msg.str());
  }
  MassFunction m;
  m.model_ = model;
  m.source_ = std::move(source_label);
  for (auto& [k, e] : merged) {
    if (e.label.empty()) e.label = element_label(model.frame(), e.element);
    e.value /= sum;  // exact renormalization of in-tolerance rounding noise
    m.entries_.push_back(std::move(e));
  }
  return m;
}

MassFunction MassFunction::vacuous(const HybridModel& model, std::string source_label) {
  if (model.surviving().empty())
    throw ValidationError("degenerate model: no surviving parts");
  MassEntry e;
  e.element = free_total(model.frame());
  e.value = 1.0;
  e.label = element_label(model.frame(), e.element);
  return from_assignments(model, {std::move(e)}, std::move(source_label));
}

double MassFunction::mass_of(const PartSet& element) const {
  for (const auto& e : entries_)
    if (e.element == element) return e.value;
  return 0.0;
}

std::string MassFunction::label_of(const PartSet& element) const {
  for (const auto& e : entries_)
    if (e.element == element) return e.label;
  return element_label(model_.frame(), element);
}

}  // namespace beldec
