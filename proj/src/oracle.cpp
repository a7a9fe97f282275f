#include "fintop/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace fintop::oracle {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

bool Rng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) return false;
  return below(denominator) < numerator;
}

std::vector<Element> Rng::permutation(std::size_t n) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
  return p;
}

std::vector<SpaceMap> brute_force_retractions(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  const std::size_t n = x_space.size();
  if (n > kMaxRetractionSpace) throw Error(Errc::TooLarge, "brute force retraction search is capped at 10 elements");
  ElementSet outside;
  for (Element x = 0; x < n; ++x)
    if (!a.contains(x)) outside.push_back(x);
  double candidates = 1;
  for (std::size_t i = 0; i < outside.size(); ++i) candidates *= static_cast<double>(a.size());
  if (candidates > static_cast<double>(kMaxRetractionCandidates)) {
    throw Error(Errc::TooLarge, "too many candidate assignments for brute force");
  }

  std::vector<SpaceMap> found;
  if (a.empty() && !outside.empty()) return found;
  const FiniteSpace target = induced_subspace(x_space, a);
  // values[x] is an element of X; choice[i] indexes into A for outside[i].
  std::vector<Element> values(n);
  for (Element x : a.indices()) values[x] = x;
  std::vector<std::size_t> choice(outside.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < outside.size(); ++i) values[outside[i]] = a.indices()[choice[i]];
    bool good = true;
    for (Element x = 0; x < n && good; ++x) {
      if (!x_space.leq(values[x], x)) good = false;
      for (Element y = 0; y < n && good; ++y)
        if (x_space.leq(x, y) && !x_space.leq(values[x], values[y])) good = false;
    }
    if (good) {
      std::vector<Element> positions(n);
      for (Element x = 0; x < n; ++x) positions[x] = *a.position(values[x]);
      found.emplace_back(x_space, target, std::move(positions));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == a.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return found;
}

std::vector<SpaceMap> enumerate_F(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  const std::size_t n = x_space.size();
  if (n > kMaxEnumerationSpace) throw Error(Errc::TooLarge, "enumerate_F is capped at 8 elements");
  // Descending maps only: f(x) ranges over U_x.
  std::vector<ElementSet> options(n);
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z)
      if (x_space.leq(z, x)) options[x].push_back(z);

  std::vector<SpaceMap> found;
  std::vector<std::size_t> choice(n, 0);
  std::vector<Element> f(n);
  for (;;) {
    for (Element x = 0; x < n; ++x) f[x] = options[x][choice[x]];
    bool good = true;
    for (Element x = 0; x < n && good; ++x) {
      if (f[f[x]] != f[x]) good = false;
      for (Element y = 0; y < n && good; ++y)
        if (x_space.leq(x, y) && !x_space.leq(f[x], f[y])) good = false;
    }
    for (Element keep : a.indices())
      if (good && std::find(f.begin(), f.end(), keep) == f.end()) good = false;
    if (good) found.emplace_back(x_space, x_space, f);
    Element x = 0;
    while (x < n && ++choice[x] == options[x].size()) choice[x++] = 0;
    if (x == n) break;
  }
  return found;
}

std::size_t lower_cover_count(const FiniteSpace& x_space, const std::vector<bool>& alive, Element x) {
  std::size_t count = 0;
  for (Element z = 0; z < x_space.size(); ++z) {
    if (!alive[z] || z == x || !x_space.leq(z, x)) continue;
    bool cover = true;
    for (Element w = 0; w < x_space.size() && cover; ++w)
      if (alive[w] && w != z && w != x && x_space.leq(z, w) && x_space.leq(w, x)) cover = false;
    if (cover) ++count;
  }
  return count;
}

std::vector<Subspace> enumerate_Omega(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  x_space.require_t0("enumerate_Omega");
  if (x_space.size() > kMaxEnumerationSpace) throw Error(Errc::TooLarge, "enumerate_Omega is capped at 8 elements");
  std::set<std::vector<bool>> reached;
  std::vector<std::vector<bool>> stack{std::vector<bool>(x_space.size(), true)};
  reached.insert(stack.back());
  while (!stack.empty()) {
    const std::vector<bool> alive = std::move(stack.back());
    stack.pop_back();
    for (Element x = 0; x < x_space.size(); ++x) {
      // Points of A can never be deleted on the way to some W ⊇ A.
      if (!alive[x] || a.contains(x) || lower_cover_count(x_space, alive, x) != 1) continue;
      std::vector<bool> next = alive;
      next[x] = false;
      if (reached.insert(next).second) stack.push_back(std::move(next));
    }
  }
  std::vector<Subspace> out;
  out.reserve(reached.size());
  for (const auto& mask : reached) out.push_back(Subspace::from_mask(x_space, mask));
  std::sort(out.begin(), out.end(), [](const Subspace& l, const Subspace& r) { return l.indices() < r.indices(); });
  return out;
}

FiniteSpace random_space(const RandomSpaceSpec& spec) {
  if (spec.size > kMaxRandomSpace) throw Error(Errc::TooLarge, "random_space is capped at 12 elements");
  Rng rng(spec.seed);
  const std::size_t n = spec.size;
  const std::size_t classes = (spec.force_t0 || n == 0) ? n : 1 + rng.below(n);

  // DAG on a uniformly random topological order of the classes.
  const auto order = rng.permutation(classes);
  std::vector<std::pair<Element, Element>> edges;
  for (std::size_t i = 0; i < classes; ++i)
    for (std::size_t j = i + 1; j < classes; ++j)
      if (rng.chance(spec.edge_numerator, spec.edge_denominator)) edges.emplace_back(order[i], order[j]);

  if (spec.force_connected && classes > 1) {
    // Bridge components with one extra relation each; there is no relation
    // between distinct components yet, so no cycle can appear.
    std::vector<Element> parent(classes);
    std::iota(parent.begin(), parent.end(), Element{0});
    auto root = [&](Element v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& [u, v] : edges) parent[root(u)] = root(v);
    std::vector<ElementSet> groups(classes);
    for (Element v = 0; v < classes; ++v) groups[root(v)].push_back(v);
    std::erase_if(groups, [](const ElementSet& g) { return g.empty(); });
    for (std::size_t g = 1; g < groups.size(); ++g) {
      const Element u = groups[g - 1][rng.below(groups[g - 1].size())];
      const Element v = groups[g][rng.below(groups[g].size())];
      if (rng.chance(1, 2)) {
        edges.emplace_back(u, v);
      } else {
        edges.emplace_back(v, u);
      }
      groups[g].insert(groups[g].end(), groups[g - 1].begin(), groups[g - 1].end());
    }
  }

  // Inflate classes to elements; every class receives at least one element.
  std::vector<Element> class_of(n);
  for (Element e = 0; e < n; ++e) class_of[e] = e < classes ? e : rng.below(classes);
  const auto shuffle = rng.permutation(n);
  std::vector<Element> shuffled(n);
  for (Element e = 0; e < n; ++e) shuffled[e] = class_of[shuffle[e]];

  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element e = 0; e < n; ++e) labels.push_back("v" + std::to_string(e));
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<ElementSet> members(classes);
  for (Element e = 0; e < n; ++e) members[shuffled[e]].push_back(e);
  for (const auto& group : members)
    for (std::size_t i = 1; i < group.size(); ++i) {
      pairs.emplace_back(group[0], group[i]);
      pairs.emplace_back(group[i], group[0]);
    }
  for (const auto& [u, v] : edges) pairs.emplace_back(members[u].front(), members[v].front());
  return FiniteSpace::from_index_pairs(std::move(labels), pairs);
}

}  // namespace fintop::oracle
