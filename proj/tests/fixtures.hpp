#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fintop/space.hpp"

namespace fixtures {

using fintop::FiniteSpace;
using fintop::LabelPair;
using fintop::Subspace;

// Sierpinski space: {0} is the only nontrivial open set, so 0 <= 1.
inline FiniteSpace sierpinski() {
  const std::vector<LabelPair> rel{{"0", "1"}};
  return FiniteSpace::from_relations({"0", "1"}, rel);
}

// Cover pairs (upper, lower) of the eight-point example space.
inline const std::vector<LabelPair>& x8_covers() {
  static const std::vector<LabelPair> covers{
      {"g", "c"}, {"g", "e"}, {"g", "f"}, {"h", "d"}, {"h", "e"}, {"h", "f"},
      {"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}, {"e", "a"}, {"f", "b"},
  };
  return covers;
}

inline FiniteSpace x8() {
  std::vector<LabelPair> rel;
  for (const auto& [upper, lower] : x8_covers()) rel.emplace_back(lower, upper);
  return FiniteSpace::from_relations({"a", "b", "c", "d", "e", "f", "g", "h"}, rel);
}

inline FiniteSpace chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<LabelPair> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FiniteSpace::from_relations(labels, rel);
}

inline FiniteSpace antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FiniteSpace::from_relations(labels, {});
}

inline FiniteSpace indiscrete_pair() {
  const std::vector<LabelPair> rel{{"p", "q"}, {"q", "p"}};
  return FiniteSpace::from_relations({"p", "q"}, rel);
}

inline FiniteSpace point(const std::string& label = "*") { return FiniteSpace::from_relations({label}, {}); }

inline Subspace sub(const FiniteSpace& x, std::initializer_list<const char*> labels) {
  std::vector<std::string> names(labels.begin(), labels.end());
  return Subspace::from_labels(x, names);
}

inline std::vector<std::string> names(const FiniteSpace& x, const std::vector<std::size_t>& elements) {
  std::vector<std::string> out;
  for (auto e : elements) out.push_back(x.label(e));
  return out;
}

inline std::vector<std::string> names(const FiniteSpace& x, const Subspace& a) { return names(x, a.indices()); }

using Names = std::vector<std::string>;

}  // namespace fixtures
