#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

// A continuous map between finite spaces. Continuity (order preservation) is
// checked when the map is built, so every SpaceMap in circulation is a
// morphism of preorders.
class SpaceMap {
 public:
  // Throws ArityMismatch / UnknownElement / NotContinuous.
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> values);

  const FiniteSpace& domain() const noexcept { return domain_; }
  const FiniteSpace& codomain() const noexcept { return codomain_; }
  const std::vector<Element>& values() const noexcept { return values_; }
  Element operator()(Element x) const { return values_.at(x); }

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<Element> values_;
};

// First pair x <= x' with f(x) not <= f(x'), if any.
std::optional<std::pair<Element, Element>> continuity_violation(const FiniteSpace& domain,
                                                                const FiniteSpace& codomain,
                                                                std::span<const Element> values);

SpaceMap make_map(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> values);
SpaceMap make_map_by_labels(FiniteSpace domain, FiniteSpace codomain, std::span<const LabelPair> assignment);

SpaceMap identity_map(const FiniteSpace& x_space);
SpaceMap constant_map(const FiniteSpace& domain, const FiniteSpace& codomain, Element value);
// The inclusion of the induced subspace A into X.
SpaceMap inclusion_map(const FiniteSpace& x_space, const Subspace& a);
// g after f. Throws DomainMismatch unless f.codomain() == g.domain().
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

// Pointwise order of Y^X: f <= g iff f(x) <= g(x) for all x.
bool map_leq(const SpaceMap& f, const SpaceMap& g);

bool is_self_map(const SpaceMap& f) noexcept;
bool is_idempotent(const SpaceMap& f);
bool is_descending(const SpaceMap& f);  // f <= Id
bool is_ascending(const SpaceMap& f);   // f >= Id

Subspace image(const SpaceMap& f);
// Elements with f(x) = x.
ElementSet fixed_points(const SpaceMap& f);

// The unique f_0 : X_0 -> Y_0 with f_0 q_X = q_Y f.
SpaceMap induced_t0_map(const SpaceMap& f);
SpaceMap induced_t0_map(const SpaceMap& f, const QuotientData& domain_q, const QuotientData& codomain_q);

// f^N for the first N with f^N = f^{N+1}. Requires a T0 domain and f <= Id
// or f >= Id.
SpaceMap iterate_to_idempotent(const SpaceMap& f);

struct EmbeddingCheck {
  enum class Failure { None, Collapsed, NotReflected };
  bool ok = true;
  Failure failure = Failure::None;
  // Collapsed: x1 != x2 with f(x1) = f(x2).
  // NotReflected: f(x1) <= f(x2) but x1 not <= x2.
  Element first = 0;
  Element second = 0;
};

// Injective and x1 <= x2 <=> f(x1) <= f(x2).
EmbeddingCheck is_embedding(const SpaceMap& f);
bool is_homeomorphism(const SpaceMap& f);

}  // namespace fintop
