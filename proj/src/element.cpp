#include "beldec/element.hpp"

#include <algorithm>

#include "beldec/errors.hpp"

namespace beldec {

ElementSpec ElementSpec::atom(std::string n) {
  ElementSpec e;
  e.kind = Kind::Atom;
  e.name = std::move(n);
  return e;
}

ElementSpec ElementSpec::intersect(std::vector<ElementSpec> a) {
  if (a.size() == 1) return a.front();
  ElementSpec e;
  e.kind = Kind::Intersect;
  e.args = std::move(a);
  return e;
}

ElementSpec ElementSpec::intersect_atoms(const std::vector<std::string>& names) {
  std::vector<ElementSpec> a;
  for (const auto& n : names) a.push_back(atom(n));
  return intersect(std::move(a));
}

ElementSpec ElementSpec::unite(std::vector<ElementSpec> a) {
  if (a.size() == 1) return a.front();
  ElementSpec e;
  e.kind = Kind::Union;
  e.args = std::move(a);
  return e;
}

PartSet ElementSpec::eval(const Frame& frame) const {
  switch (kind) {
    case Kind::Atom: {
      auto idx = frame.index_of(name);
      if (!idx) throw ValidationError("unknown hypothesis '" + name + "'");
      return free_atom(frame, *idx);
    }
    case Kind::Intersect: {
      if (args.empty()) throw ValidationError("empty intersection expression");
      PartSet acc = args.front().eval(frame);
      for (std::size_t i = 1; i < args.size(); ++i) acc = acc.intersect(args[i].eval(frame));
      return acc;
    }
    case Kind::Union: {
      if (args.empty()) throw ValidationError("empty union expression");
      PartSet acc = args.front().eval(frame);
      for (std::size_t i = 1; i < args.size(); ++i) acc = acc.unite(args[i].eval(frame));
      return acc;
    }
    case Kind::Parts: {
      std::vector<Part> out;
      for (const auto& region : parts) {
        if (region.empty()) throw ValidationError("empty part in 'parts' element");
        Part p = 0;
        for (const auto& n : region) {
          auto idx = frame.index_of(n);
          if (!idx) throw ValidationError("unknown hypothesis '" + n + "'");
          p |= Part{1} << (*idx - 1);
        }
        out.push_back(p);
      }
      return PartSet::of(std::move(out));
    }
  }
  throw ComputeError("unreachable element kind");
}

std::string ElementSpec::label() const {
  switch (kind) {
    case Kind::Atom:
      return name;
    case Kind::Intersect:
    case Kind::Union: {
      const char* sep = kind == Kind::Intersect ? "∩" : "∪";
      std::string out;
      for (const auto& a : args) {
        if (!out.empty()) out += sep;
        const bool wrap = a.kind == Kind::Intersect || a.kind == Kind::Union;
        out += wrap ? "(" + a.label() + ")" : a.label();
      }
      return out;
    }
    case Kind::Parts: {
      std::string out = "{";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        for (std::size_t j = 0; j < parts[i].size(); ++j) {
          if (j) out += "·";
          out += parts[i][j];
        }
      }
      return out + "}";
    }
  }
  return "?";
}

std::vector<std::string> ElementSpec::atom_names() const {
  std::vector<std::string> out;
  switch (kind) {
    case Kind::Atom:
      out.push_back(name);
      break;
    case Kind::Intersect:
    case Kind::Union:
      for (const auto& a : args)
        for (auto& n : a.atom_names()) out.push_back(std::move(n));
      break;
    case Kind::Parts:
      for (const auto& region : parts)
        for (const auto& n : region) out.push_back(n);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace beldec
