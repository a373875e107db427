#pragma once

#include <string>
#include <vector>

#include "beldec/frame.hpp"

namespace beldec {

inline constexpr double kMassSumTolerance = 1e-9;

struct MassEntry {
  PartSet element;  // free-algebra canonical form
  double value = 0.0;
  std::string label;
};

// Basic belief assignment over canonical elements. Keys are free-algebra part
// sets; the empty element never carries mass and the total is exactly 1 after
// construction (inputs within 1e-9 of 1 are renormalized).
class MassFunction {
public:
  // Canonicalizes keys, merges duplicates additively, validates the mass
  // constraints and rejects mass on model-empty elements.
  static MassFunction from_assignments(const HybridModel& model,
                                       std::vector<MassEntry> entries,
                                       std::string source_label);
  // Total ignorance: all mass on the full union.
  static MassFunction vacuous(const HybridModel& model,
                              std::string source_label = "vacuous");

  const HybridModel& model() const { return model_; }
  const std::string& source() const { return source_; }
  // Entries with positive mass, in canonical order.
  const std::vector<MassEntry>& focal_elements() const { return entries_; }
  double mass_of(const PartSet& element) const;
  // Label of the element if it is focal, otherwise a derived label.
  std::string label_of(const PartSet& element) const;

private:
  HybridModel model_;
  std::vector<MassEntry> entries_;
  std::string source_;
};

}  // namespace beldec
