#include "fintop/beat_retracts.hpp"

#include <algorithm>
#include <numeric>

namespace fintop {

std::optional<Element> down_beat_cover(const FiniteSpace& x_space, const std::vector<bool>& alive, Element x) {
  std::vector<Element> below;
  for (Element z = 0; z < x_space.size(); ++z)
    if (alive[z] && z != x && x_space.leq(z, x)) below.push_back(z);
  if (below.empty()) return std::nullopt;
  return maximum_of(x_space, below);
}

ElementSet down_beat_points(const FiniteSpace& x_space) {
  x_space.require_t0("down_beat_points");
  const std::vector<bool> alive(x_space.size(), true);
  ElementSet out;
  for (Element x = 0; x < x_space.size(); ++x)
    if (down_beat_cover(x_space, alive, x)) out.push_back(x);
  return out;
}

ElementSet up_beat_points(const FiniteSpace& x_space) { return down_beat_points(opposite(x_space)); }

SpaceMap stong_retraction(const FiniteSpace& x_space, Element x) {
  x_space.require_t0("stong_retraction");
  x_space.check_element(x);
  const std::vector<bool> alive(x_space.size(), true);
  const auto cover = down_beat_cover(x_space, alive, x);
  if (!cover) throw Error(Errc::NotDownBeatPoint, "'" + x_space.label(x) + "' is not a down beat point", {x});
  std::vector<Element> rest;
  for (Element z = 0; z < x_space.size(); ++z)
    if (z != x) rest.push_back(z);
  const Subspace target = Subspace::of(x_space, rest);
  std::vector<Element> values(x_space.size());
  for (Element z = 0; z < x_space.size(); ++z) values[z] = *target.position(z == x ? *cover : z);
  return SpaceMap(x_space, induced_subspace(x_space, target), std::move(values));
}

RetractCertificate is_dbp_retract_maxcriterion(const FiniteSpace& x_space, const Subspace& a) {
  x_space.require_t0("is_dbp_retract_maxcriterion");
  a.check_parent(x_space);
  RetractCertificate cert;
  if (a.empty() && !x_space.empty()) {
    // Minimal points survive every removal, so no nonempty X retracts onto ∅.
    cert.failure_witness = minimal_elements(x_space).front();
    return cert;
  }
  std::vector<Element> values(x_space.size());
  for (Element x = 0; x < x_space.size(); ++x) {
    if (auto pos = a.position(x)) {
      values[x] = *pos;
      continue;
    }
    ElementSet meet;
    for (Element z : a.indices())
      if (x_space.leq(z, x)) meet.push_back(z);
    const auto top = maximum_of(x_space, meet);
    if (!top) {
      cert.failure_witness = x;
      cert.witness_set = std::move(meet);
      return cert;
    }
    values[x] = *a.position(*top);
  }
  cert.kind = RetractCertificate::Kind::Retraction;
  cert.retraction.emplace(x_space, induced_subspace(x_space, a), std::move(values));
  return cert;
}

namespace {

// Repeatedly delete the first eligible point in `priority` order.
MinimalRetract remove_until_stuck(const FiniteSpace& x_space, const Subspace& a, std::span<const Element> priority) {
  std::vector<bool> alive(x_space.size(), true);
  RemovalTrace trace;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (Element x : priority) {
      if (!alive[x] || a.contains(x)) continue;
      if (auto cover = down_beat_cover(x_space, alive, x)) {
        alive[x] = false;
        trace.push_back({x, *cover});
        progressed = true;
        break;
      }
    }
  }
  return {Subspace::from_mask(x_space, alive), std::move(trace)};
}

std::vector<Element> index_order(std::size_t n) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  return order;
}

}  // namespace

RemovalResult is_dbp_retract_removal(const FiniteSpace& x_space, const Subspace& a) {
  x_space.require_t0("is_dbp_retract_removal");
  a.check_parent(x_space);
  auto [residue, trace] = remove_until_stuck(x_space, a, index_order(x_space.size()));
  RemovalResult result;
  result.is_retract = residue == a;
  result.trace = std::move(trace);
  result.residue = std::move(residue);
  return result;
}

MinimalRetract minimal_dbp_retract(const FiniteSpace& x_space, const Subspace& a) {
  return minimal_dbp_retract(x_space, a, index_order(x_space.size()));
}

MinimalRetract minimal_dbp_retract(const FiniteSpace& x_space, const Subspace& a, std::span<const Element> priority) {
  x_space.require_t0("minimal_dbp_retract");
  a.check_parent(x_space);
  std::vector<Element> sorted(priority.begin(), priority.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != index_order(x_space.size())) {
    throw Error(Errc::InvalidIndex, "removal priority must be a permutation of the space");
  }
  return remove_until_stuck(x_space, a, priority);
}

SpaceMap canonical_idempotent(const FiniteSpace& x_space, const Subspace& a) {
  auto cert = is_dbp_retract_maxcriterion(x_space, a);
  if (!cert.ok()) {
    throw Error(Errc::NotADbpRetract,
                "U_" + x_space.label(*cert.failure_witness) + " ∩ A has no maximum", {*cert.failure_witness});
  }
  return compose(inclusion_map(x_space, a), *cert.retraction);
}

void require_in_F(const SpaceMap& f, const Subspace& a, std::string_view name) {
  const std::string who(name);
  if (!is_self_map(f)) throw Error(Errc::NotInF, who + " is not a self-map");
  a.check_parent(f.domain());
  if (!is_descending(f)) throw Error(Errc::NotInF, who + " is not <= Id");
  if (!is_idempotent(f)) throw Error(Errc::NotInF, who + " is not idempotent");
  const Subspace img = image(f);
  for (Element x : a.indices())
    if (!img.contains(x)) throw Error(Errc::NotInF, who + " does not have A in its image", {x});
}

SpaceMap star(const SpaceMap& f, const SpaceMap& g, const Subspace& a) {
  require_in_F(f, a, "f");
  require_in_F(g, a, "g");
  if (!(f.domain() == g.domain())) throw Error(Errc::DomainMismatch, "f and g act on different spaces");
  return iterate_to_idempotent(compose(f, g));
}

SpaceMap star(const SpaceMap& f, const SpaceMap& g) { return star(f, g, Subspace::none(f.domain())); }

RetractCertificate is_ubp_retract(const FiniteSpace& x_space, const Subspace& a) {
  x_space.require_t0("is_ubp_retract");
  auto cert = is_dbp_retract_maxcriterion(opposite(x_space), a);
  if (cert.ok()) {
    // r is order preserving on X^op, hence on X.
    std::vector<Element> values = cert.retraction->values();
    cert.retraction.emplace(x_space, induced_subspace(x_space, a), std::move(values));
  }
  return cert;
}

bool validates_as_dbp_certificate(const FiniteSpace& x_space, const Subspace& a, const RetractCertificate& cert) {
  if (cert.ok()) {
    if (!cert.retraction) return false;
    const SpaceMap& r = *cert.retraction;
    if (!(r.domain() == x_space) || !(r.codomain() == induced_subspace(x_space, a))) return false;
    for (Element x = 0; x < x_space.size(); ++x) {
      const Element image_in_x = a.indices()[r(x)];
      if (a.contains(x) && image_in_x != x) return false;
      if (!x_space.leq(image_in_x, x)) return false;
    }
    return true;
  }
  if (!cert.failure_witness) return false;
  const Element x = *cert.failure_witness;
  ElementSet meet;
  for (Element z : a.indices())
    if (x_space.leq(z, x)) meet.push_back(z);
  return meet == cert.witness_set && !maximum_of(x_space, meet);
}

bool replays_as_dbp_trace(const FiniteSpace& x_space, const RemovalTrace& trace, const Subspace& expected_end) {
  std::vector<bool> alive(x_space.size(), true);
  for (const auto& step : trace) {
    if (step.removed >= x_space.size() || !alive[step.removed]) return false;
    const auto cover = down_beat_cover(x_space, alive, step.removed);
    if (!cover || *cover != step.lower_cover) return false;
    alive[step.removed] = false;
  }
  return alive == expected_end.mask();
}

}  // namespace fintop
