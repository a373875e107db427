#pragma once

#include <string>
#include <vector>

#include "beldec/frame.hpp"

namespace beldec {

// Parsed element expression: atoms combined with intersections and unions,
// plus a raw part-listing escape hatch for elements with no short expression.
struct ElementSpec {
  enum class Kind { Atom, Intersect, Union, Parts };

  Kind kind = Kind::Atom;
  std::string name;                              // Atom
  std::vector<ElementSpec> args;                 // Intersect / Union
  std::vector<std::vector<std::string>> parts;   // Parts: each inner list is one region

  static ElementSpec atom(std::string n);
  static ElementSpec intersect(std::vector<ElementSpec> a);
  static ElementSpec intersect_atoms(const std::vector<std::string>& names);
  static ElementSpec unite(std::vector<ElementSpec> a);

  // Free-model part set of the expression over the given frame.
  PartSet eval(const Frame& frame) const;
  std::string label() const;
  // Every atom name mentioned anywhere in the expression.
  std::vector<std::string> atom_names() const;
};

}  // namespace beldec
