#include "fintop/maps.hpp"

namespace fintop {

std::optional<std::pair<Element, Element>> continuity_violation(const FiniteSpace& domain,
                                                                const FiniteSpace& codomain,
                                                                std::span<const Element> values) {
  for (Element x = 0; x < domain.size(); ++x)
    for (Element y = 0; y < domain.size(); ++y)
      if (domain.leq(x, y) && !codomain.leq(values[x], values[y])) return std::pair{x, y};
  return std::nullopt;
}

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> values)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw Error(Errc::ArityMismatch, "map assigns " + std::to_string(values_.size()) + " values to a domain of " +
                                         std::to_string(domain_.size()) + " elements");
  }
  for (Element v : values_) codomain_.check_element(v);
  if (auto bad = continuity_violation(domain_, codomain_, values_)) {
    const auto [x, y] = *bad;
    throw Error(Errc::NotContinuous,
                domain_.label(x) + " <= " + domain_.label(y) + " but " + codomain_.label(values_[x]) +
                    " is not <= " + codomain_.label(values_[y]),
                {x, y});
  }
}

SpaceMap make_map(FiniteSpace domain, FiniteSpace codomain, std::vector<Element> values) {
  return SpaceMap(std::move(domain), std::move(codomain), std::move(values));
}

SpaceMap make_map_by_labels(FiniteSpace domain, FiniteSpace codomain, std::span<const LabelPair> assignment) {
  const std::size_t n = domain.size();
  std::vector<Element> values(n, n);
  for (const auto& [from, to] : assignment) {
    const Element x = domain.index_of(from);
    if (values[x] != n) throw Error(Errc::ArityMismatch, "map assigns '" + from + "' twice", {x});
    values[x] = codomain.index_of(to);
  }
  for (Element x = 0; x < n; ++x)
    if (values[x] == n) throw Error(Errc::ArityMismatch, "map leaves '" + domain.label(x) + "' unassigned", {x});
  return SpaceMap(std::move(domain), std::move(codomain), std::move(values));
}

SpaceMap identity_map(const FiniteSpace& x_space) {
  std::vector<Element> values(x_space.size());
  for (Element x = 0; x < values.size(); ++x) values[x] = x;
  return SpaceMap(x_space, x_space, std::move(values));
}

SpaceMap constant_map(const FiniteSpace& domain, const FiniteSpace& codomain, Element value) {
  return SpaceMap(domain, codomain, std::vector<Element>(domain.size(), value));
}

SpaceMap inclusion_map(const FiniteSpace& x_space, const Subspace& a) {
  return SpaceMap(induced_subspace(x_space, a), x_space, a.indices());
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.codomain() == g.domain())) throw Error(Errc::DomainMismatch, "cannot compose: codomain of f is not domain of g");
  std::vector<Element> values(f.domain().size());
  for (Element x = 0; x < values.size(); ++x) values[x] = g(f(x));
  return SpaceMap(f.domain(), g.codomain(), std::move(values));
}

bool map_leq(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw Error(Errc::DomainMismatch, "maps have different domains or codomains");
  }
  for (Element x = 0; x < f.domain().size(); ++x)
    if (!f.codomain().leq(f(x), g(x))) return false;
  return true;
}

bool is_self_map(const SpaceMap& f) noexcept { return f.domain() == f.codomain(); }

bool is_idempotent(const SpaceMap& f) {
  if (!is_self_map(f)) return false;
  for (Element x = 0; x < f.domain().size(); ++x)
    if (f(f(x)) != f(x)) return false;
  return true;
}

bool is_descending(const SpaceMap& f) {
  if (!is_self_map(f)) return false;
  for (Element x = 0; x < f.domain().size(); ++x)
    if (!f.domain().leq(f(x), x)) return false;
  return true;
}

bool is_ascending(const SpaceMap& f) {
  if (!is_self_map(f)) return false;
  for (Element x = 0; x < f.domain().size(); ++x)
    if (!f.domain().leq(x, f(x))) return false;
  return true;
}

Subspace image(const SpaceMap& f) {
  std::vector<bool> mask(f.codomain().size(), false);
  for (Element v : f.values()) mask[v] = true;
  return Subspace::from_mask(f.codomain(), mask);
}

ElementSet fixed_points(const SpaceMap& f) {
  ElementSet out;
  for (Element x = 0; x < f.domain().size(); ++x)
    if (f(x) == x) out.push_back(x);
  return out;
}

SpaceMap induced_t0_map(const SpaceMap& f, const QuotientData& domain_q, const QuotientData& codomain_q) {
  std::vector<Element> values(domain_q.quotient.size());
  for (Element c = 0; c < values.size(); ++c) values[c] = codomain_q.class_of[f(domain_q.representative[c])];
  // Well-defined: x ~ x' forces f(x) ~ f(x') by continuity.
  for (Element x = 0; x < f.domain().size(); ++x) {
    if (values[domain_q.class_of[x]] != codomain_q.class_of[f(x)]) {
      throw std::logic_error("induced_t0_map: f_0 q_X != q_Y f");
    }
  }
  return SpaceMap(domain_q.quotient, codomain_q.quotient, std::move(values));
}

SpaceMap induced_t0_map(const SpaceMap& f) {
  return induced_t0_map(f, kolmogorov_quotient(f.domain()), kolmogorov_quotient(f.codomain()));
}

SpaceMap iterate_to_idempotent(const SpaceMap& f) {
  if (!is_self_map(f)) throw Error(Errc::DomainMismatch, "iterate_to_idempotent needs a self-map");
  f.domain().require_t0("iterate_to_idempotent");
  if (!is_descending(f) && !is_ascending(f)) {
    throw Error(Errc::NotDescending, "map is neither <= Id nor >= Id");
  }
  // Each orbit f(x) >= f^2(x) >= ... is a chain in a poset and stops moving
  // once it hits a fixed point, so n + 1 rounds always suffice.
  const std::size_t n = f.domain().size();
  std::vector<Element> current = f.values();
  for (std::size_t round = 0; round <= n + 1; ++round) {
    std::vector<Element> next(n);
    for (Element x = 0; x < n; ++x) next[x] = f(current[x]);
    if (next == current) return SpaceMap(f.domain(), f.codomain(), std::move(current));
    current = std::move(next);
  }
  throw std::logic_error("iterate_to_idempotent: iteration did not stabilize");
}

EmbeddingCheck is_embedding(const SpaceMap& f) {
  const auto& x = f.domain();
  const auto& y = f.codomain();
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = a + 1; b < x.size(); ++b)
      if (f(a) == f(b)) return {false, EmbeddingCheck::Failure::Collapsed, a, b};
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = 0; b < x.size(); ++b)
      if (y.leq(f(a), f(b)) && !x.leq(a, b)) return {false, EmbeddingCheck::Failure::NotReflected, a, b};
  return {};
}

bool is_homeomorphism(const SpaceMap& f) {
  return f.domain().size() == f.codomain().size() && is_embedding(f).ok;
}

}  // namespace fintop
