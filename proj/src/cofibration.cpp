#include "fintop/cofibration.hpp"

#include <algorithm>
#include <set>

namespace fintop {

namespace {

// Lift the T0 retraction ρ of the single component back to X:
// r(x) = x on A, r(x) = j_A ρ q_X(x) off A, with j_A the least-index section.
SpaceMap lift_retraction(const FiniteSpace& x_space, const Subspace& a, const QuotientData& q,
                         const ComponentCheck& check) {
  const std::size_t k = q.quotient.size();
  std::vector<Element> section(k, x_space.size());
  for (Element x : a.indices())
    if (section[q.class_of[x]] == x_space.size()) section[q.class_of[x]] = x;

  const SpaceMap& rho = *check.certificate.retraction;
  std::vector<Element> values(x_space.size());
  for (Element x = 0; x < x_space.size(); ++x) {
    Element target = x;
    if (!a.contains(x)) {
      const Element pos_in_component = static_cast<Element>(
          std::lower_bound(check.component.begin(), check.component.end(), q.class_of[x]) - check.component.begin());
      const Element class_in_x0 = check.component[check.target.indices()[rho(pos_in_component)]];
      target = section[class_in_x0];
    }
    values[x] = *a.position(target);
  }
  SpaceMap r(x_space, induced_subspace(x_space, a), std::move(values));
  for (Element x = 0; x < x_space.size(); ++x)
    if (!x_space.leq(a.indices()[r(x)], x)) throw std::logic_error("lifted retraction violates i∘r <= Id");
  return r;
}

}  // namespace

CofibrationReport is_cofibration_inclusion(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  CofibrationReport report;
  report.source = induced_subspace(x_space, a);
  report.space = x_space;
  report.subspace = a;
  report.quotient = kolmogorov_quotient(x_space);
  const auto& q = report.quotient;

  std::vector<bool> in_qa(q.quotient.size(), false);
  for (Element x : a.indices()) in_qa[q.class_of[x]] = true;

  report.verdict = true;
  for (auto& component : connected_components(q.quotient)) {
    ElementSet target;
    for (std::size_t pos = 0; pos < component.size(); ++pos)
      if (in_qa[component[pos]]) target.push_back(pos);
    if (target.empty()) continue;  // empty inclusions impose nothing
    ComponentCheck check;
    check.component_space = induced_subspace(q.quotient, Subspace::of(q.quotient, component));
    check.target = Subspace::of(check.component_space, std::move(target));
    check.certificate = is_dbp_retract_maxcriterion(check.component_space, check.target);
    check.component = std::move(component);
    report.verdict = report.verdict && check.certificate.ok();
    report.per_component.push_back(std::move(check));
  }

  if (report.verdict && !a.empty() && is_connected(x_space)) {
    report.assembled_retraction = lift_retraction(x_space, a, q, report.per_component.front());
  }
  return report;
}

CofibrationReport is_cofibration_map(const SpaceMap& f) {
  const auto embedding = is_embedding(f);
  if (!embedding.ok) {
    CofibrationReport report;
    report.verdict = false;
    report.embedding_ok = false;
    report.embedding_witness = embedding;
    report.source = f.domain();
    report.space = f.codomain();
    report.subspace = image(f);
    report.quotient = kolmogorov_quotient(f.codomain());
    return report;
  }
  CofibrationReport report = is_cofibration_inclusion(f.codomain(), image(f));
  report.source = f.domain();
  report.embedding_witness = embedding;
  return report;
}

bool is_well_pointed(const FiniteSpace& x_space, Element base) {
  x_space.check_element(base);
  if (!is_connected(x_space)) return is_cofibration_inclusion(x_space, Subspace::of(x_space, {base})).verdict;
  for (Element x = 0; x < x_space.size(); ++x)
    if (!x_space.leq(base, x)) return false;
  return true;
}

bool closed_subspace_obstruction(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  return !a.empty() && a.size() < x_space.size() && is_closed(x_space, a) && is_connected(x_space);
}

SpaceMap sdr_certificate(const CofibrationReport& report) {
  if (!report.verdict) throw Error(Errc::NoCertificate, "the inclusion is not a cofibration");
  if (!report.assembled_retraction) {
    throw Error(Errc::NoCertificate, "no global retraction: the space is disconnected or the subspace is empty");
  }
  return *report.assembled_retraction;
}

namespace {

struct BeatSearch {
  const FiniteSpace& space;
  const FiniteSpace dual;
  const std::vector<bool> goal;
  std::size_t budget;
  std::set<std::vector<bool>> visited;
  std::vector<BeatRemoval> path;

  bool run(std::vector<bool>& alive) {
    if (alive == goal) return true;
    if (!visited.insert(alive).second) return false;
    if (visited.size() > budget) {
      throw Error(Errc::BudgetExceeded, "beat point search exceeded " + std::to_string(budget) + " states");
    }
    for (Element x = 0; x < space.size(); ++x) {
      if (!alive[x] || goal[x]) continue;
      for (auto kind : {BeatRemoval::Kind::Down, BeatRemoval::Kind::Up}) {
        const auto partner = kind == BeatRemoval::Kind::Down ? down_beat_cover(space, alive, x)
                                                             : down_beat_cover(dual, alive, x);
        if (!partner) continue;
        alive[x] = false;
        path.push_back({x, kind, *partner});
        if (run(alive)) return true;
        path.pop_back();
        alive[x] = true;
        break;  // the resulting state does not depend on the kind
      }
    }
    return false;
  }
};

}  // namespace

BeatSearchResult beat_point_retract_search(const FiniteSpace& x_space, const Subspace& a, std::size_t budget) {
  x_space.require_t0("beat_point_retract_search");
  a.check_parent(x_space);
  BeatSearch search{x_space, opposite(x_space), a.mask(), budget, {}, {}};
  std::vector<bool> alive(x_space.size(), true);
  BeatSearchResult result;
  result.found = search.run(alive);
  result.sequence = std::move(search.path);
  result.states_explored = search.visited.size();
  return result;
}

bool replays_as_beat_sequence(const FiniteSpace& x_space, const std::vector<BeatRemoval>& sequence,
                              const Subspace& expected_end) {
  const FiniteSpace dual = opposite(x_space);
  std::vector<bool> alive(x_space.size(), true);
  for (const auto& step : sequence) {
    if (step.removed >= x_space.size() || !alive[step.removed]) return false;
    const auto partner = step.kind == BeatRemoval::Kind::Down ? down_beat_cover(x_space, alive, step.removed)
                                                              : down_beat_cover(dual, alive, step.removed);
    if (!partner || *partner != step.partner) return false;
    alive[step.removed] = false;
  }
  return alive == expected_end.mask();
}

}  // namespace fintop
