#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beldec {

// One atomic Venn region, identified by the exact set of hypotheses whose
// circles cover it. Bit i-1 set <=> hypothesis i covers the region.
// A part identifier is never zero.
using Part = std::uint32_t;

// Frame of discernment: the ordered hypotheses under consideration.
class Frame {
public:
  explicit Frame(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  // 1-based hypothesis index.
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i) - 1); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Frame&) const = default;

private:
  std::vector<std::string> labels_;
};

// Canonical element of the belief space, stored as the set of Venn parts it
// covers. Equality of part sets is equality of elements.
class PartSet {
public:
  PartSet() = default;
  static PartSet of(std::vector<Part> parts);  // sorts and dedupes

  bool empty() const { return parts_.empty(); }
  std::size_t count() const { return parts_.size(); }
  bool contains(Part p) const;
  bool subset_of(const PartSet& other) const;

  PartSet intersect(const PartSet& other) const;
  PartSet unite(const PartSet& other) const;

  const std::vector<Part>& parts() const { return parts_; }

  bool operator==(const PartSet&) const = default;
  // Deterministic total order: by part count, then lexicographic patterns.
  bool operator<(const PartSet& other) const;

private:
  std::vector<Part> parts_;  // sorted, unique, all non-zero
};

// All 2^n - 1 parts of the free n-hypothesis Venn diagram.
PartSet free_total(const Frame& frame);
// Free-model atom theta_i: every part whose identifier contains i.
PartSet free_atom(const Frame& frame, int i);

// A frame plus integrity constraints; owns the surviving-part universe.
class HybridModel {
public:
  static HybridModel free_model(Frame frame);

  const Frame& frame() const { return frame_; }
  const PartSet& surviving() const { return surviving_; }
  const std::vector<PartSet>& constraints() const { return constraints_; }
  // Set when a constraint wiped out every part of some singleton.
  bool emptied_singleton() const { return emptied_singleton_; }

  // Model-canonical form: drop suppressed parts.
  PartSet mask(const PartSet& a) const { return a.intersect(surviving_); }
  bool model_empty(const PartSet& a) const { return mask(a).empty(); }
  // DSm cardinality C_M(a).
  int cardinality(const PartSet& a) const { return static_cast<int>(mask(a).count()); }
  // Surviving parts whose identifier contains hypothesis i (1-based).
  PartSet atom(int i) const;

  bool operator==(const HybridModel&) const = default;

private:
  friend HybridModel apply_constraints(const Frame&, const std::vector<PartSet>&);
  Frame frame_{std::vector<std::string>{"?"}};
  std::vector<PartSet> constraints_;
  PartSet surviving_;
  bool emptied_singleton_ = false;
};

// Builds the hybrid model whose surviving parts exclude every part composing
// any constrained element. Constraining the empty element is a no-op.
HybridModel apply_constraints(const Frame& frame, const std::vector<PartSet>& constraints);

// Closure of the model's atoms under intersection and union, plus the empty
// element, deduplicated and ordered by (DSm cardinality, part patterns).
// Guarded to frames with at most 6 hypotheses.
std::vector<PartSet> enumerate_hyper_power_set(const HybridModel& model);

// If the free-algebra element is exactly an intersection (resp. union) of
// atoms, the bitmask of those atoms; otherwise nullopt.
std::optional<Part> as_atom_intersection(const Frame& frame, const PartSet& free_elem);
std::optional<Part> as_atom_union(const Frame& frame, const PartSet& free_elem);

// Human-readable name for a free-algebra element: an atom, an intersection of
// atoms, a union of atoms, or a raw part listing as fallback.
std::string element_label(const Frame& frame, const PartSet& free_elem);
// Same search, but matching candidates after model masking (used when
// printing elements of a hybrid model's restricted belief space).
std::string element_label(const HybridModel& model, const PartSet& masked_elem);

}  // namespace beldec
