#include "beldec/frame.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_set>

#include "beldec/errors.hpp"

namespace beldec {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("frame needs at least one hypothesis");
  if (labels_.size() > 16) throw ValidationError("frame too large (max 16 hypotheses)");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("hypothesis label must be non-empty");
    if (!seen.insert(l).second)
      throw ValidationError("duplicate hypothesis label '" + l + "'");
  }
}

std::optional<int> Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<int>(i) + 1;
  return std::nullopt;
}

PartSet PartSet::of(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (!parts.empty() && parts.front() == 0)
    throw ValidationError("part identifier must be a non-empty hypothesis subset");
  PartSet ps;
  ps.parts_ = std::move(parts);
  return ps;
}

bool PartSet::contains(Part p) const {
  return std::binary_search(parts_.begin(), parts_.end(), p);
}

bool PartSet::subset_of(const PartSet& other) const {
  return std::includes(other.parts_.begin(), other.parts_.end(), parts_.begin(), parts_.end());
}

PartSet PartSet::intersect(const PartSet& other) const {
  std::vector<Part> out;
  std::set_intersection(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
                        std::back_inserter(out));
  PartSet ps;
  ps.parts_ = std::move(out);
  return ps;
}

PartSet PartSet::unite(const PartSet& other) const {
  std::vector<Part> out;
  std::set_union(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
                 std::back_inserter(out));
  PartSet ps;
  ps.parts_ = std::move(out);
  return ps;
}

bool PartSet::operator<(const PartSet& other) const {
  if (parts_.size() != other.parts_.size()) return parts_.size() < other.parts_.size();
  return parts_ < other.parts_;
}

PartSet free_total(const Frame& frame) {
  const Part all = (Part{1} << frame.size()) - 1;
  std::vector<Part> parts;
  parts.reserve(all);
  for (Part p = 1; p <= all; ++p) parts.push_back(p);
  return PartSet::of(std::move(parts));
}

PartSet free_atom(const Frame& frame, int i) {
  if (i < 1 || i > frame.size())
    throw ValidationError("hypothesis index out of range");
  const Part bit = Part{1} << (i - 1);
  const Part all = (Part{1} << frame.size()) - 1;
  std::vector<Part> parts;
  for (Part p = 1; p <= all; ++p)
    if (p & bit) parts.push_back(p);
  return PartSet::of(std::move(parts));
}

HybridModel HybridModel::free_model(Frame frame) {
  return apply_constraints(frame, {});
}

PartSet HybridModel::atom(int i) const {
  if (i < 1 || i > frame_.size())
    throw ValidationError("hypothesis index out of range");
  const Part bit = Part{1} << (i - 1);
  std::vector<Part> parts;
  for (Part p : surviving_.parts())
    if (p & bit) parts.push_back(p);
  return PartSet::of(std::move(parts));
}

HybridModel apply_constraints(const Frame& frame, const std::vector<PartSet>& constraints) {
  HybridModel m;
  m.frame_ = frame;
  m.constraints_ = constraints;
  PartSet suppressed;
  for (const auto& c : constraints) suppressed = suppressed.unite(c);
  std::vector<Part> kept;
  const PartSet all = free_total(frame);
  for (Part p : all.parts())
    if (!suppressed.contains(p)) kept.push_back(p);
  m.surviving_ = PartSet::of(std::move(kept));
  for (int i = 1; i <= frame.size(); ++i)
    if (m.atom(i).empty()) m.emptied_singleton_ = true;
  return m;
}

std::vector<PartSet> enumerate_hyper_power_set(const HybridModel& model) {
  if (model.frame().size() > 6)
    throw ValidationError("frame too large for belief-space enumeration (max 6)");
  std::set<PartSet> elems;
  for (int i = 1; i <= model.frame().size(); ++i) elems.insert(model.atom(i));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PartSet> snapshot(elems.begin(), elems.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a) {
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        if (elems.insert(snapshot[a].intersect(snapshot[b])).second) grew = true;
        if (elems.insert(snapshot[a].unite(snapshot[b])).second) grew = true;
      }
    }
  }
  elems.insert(PartSet{});
  std::vector<PartSet> out(elems.begin(), elems.end());
  std::sort(out.begin(), out.end(), [&](const PartSet& x, const PartSet& y) {
    const int cx = model.cardinality(x), cy = model.cardinality(y);
    if (cx != cy) return cx < cy;
    return x.parts() < y.parts();
  });
  return out;
}

namespace {

std::string join_labels(const Frame& frame, Part hyps, const char* sep) {
  std::string out;
  for (int i = 1; i <= frame.size(); ++i) {
    if (hyps & (Part{1} << (i - 1))) {
      if (!out.empty()) out += sep;
      out += frame.label(i);
    }
  }
  return out;
}

// Free-algebra part set of the intersection of the atoms in `hyps`:
// every part covering all of them.
PartSet free_intersection_of(const Frame& frame, Part hyps) {
  const Part all = (Part{1} << frame.size()) - 1;
  std::vector<Part> parts;
  for (Part p = 1; p <= all; ++p)
    if ((p & hyps) == hyps) parts.push_back(p);
  return PartSet::of(std::move(parts));
}

// Free-algebra part set of the union of the atoms in `hyps`.
PartSet free_union_of(const Frame& frame, Part hyps) {
  const Part all = (Part{1} << frame.size()) - 1;
  std::vector<Part> parts;
  for (Part p = 1; p <= all; ++p)
    if (p & hyps) parts.push_back(p);
  return PartSet::of(std::move(parts));
}

std::string fallback_label(const Frame& frame, const PartSet& elem) {
  std::string out = "{";
  bool first = true;
  for (Part p : elem.parts()) {
    if (!first) out += ",";
    first = false;
    out += join_labels(frame, p, "·");
  }
  out += "}";
  return out;
}

template <typename Canon>
std::string label_search(const Frame& frame, const PartSet& elem, Canon&& canon) {
  if (elem.empty()) return "∅";
  const Part all = (Part{1} << frame.size()) - 1;
  // Candidate subsets ordered by size then value, intersections before unions,
  // so the shortest description wins.
  std::vector<Part> subsets;
  for (Part s = 1; s <= all; ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](Part a, Part b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (Part s : subsets)
    if (canon(free_intersection_of(frame, s)) == elem)
      return join_labels(frame, s, "∩");
  for (Part s : subsets)
    if (std::popcount(s) >= 2 && canon(free_union_of(frame, s)) == elem)
      return join_labels(frame, s, "∪");
  return fallback_label(frame, elem);
}

}  // namespace

std::optional<Part> as_atom_intersection(const Frame& frame, const PartSet& free_elem) {
  if (free_elem.empty()) return std::nullopt;
  Part s = ~Part{0};
  for (Part p : free_elem.parts()) s &= p;
  if (s != 0 && free_intersection_of(frame, s) == free_elem) return s;
  return std::nullopt;
}

std::optional<Part> as_atom_union(const Frame& frame, const PartSet& free_elem) {
  if (free_elem.empty()) return std::nullopt;
  // i belongs to the union iff the lone part {i} does.
  Part s = 0;
  for (int i = 1; i <= frame.size(); ++i)
    if (free_elem.contains(Part{1} << (i - 1))) s |= Part{1} << (i - 1);
  if (s != 0 && free_union_of(frame, s) == free_elem) return s;
  return std::nullopt;
}

std::string element_label(const Frame& frame, const PartSet& free_elem) {
  return label_search(frame, free_elem, [](PartSet ps) { return ps; });
}

std::string element_label(const HybridModel& model, const PartSet& masked_elem) {
  return label_search(model.frame(), masked_elem,
                      [&](const PartSet& ps) { return model.mask(ps); });
}

}  // namespace beldec
