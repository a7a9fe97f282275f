#include "fintop/space.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace fintop {

BitMatrix::BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void BitMatrix::or_row(std::size_t i, std::size_t k) noexcept {
  std::uint64_t* dst = bits_.data() + i * words_;
  const std::uint64_t* src = bits_.data() + k * words_;
  for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
}

void BitMatrix::transitive_closure() noexcept {
  // Warshall: after step k, paths through {0..k} are closed.
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != k && test(i, k)) or_row(i, k);
    }
  }
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (test(i, j)) t.set(j, i);
  return t;
}

struct FiniteSpace::Impl {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Element> index;
  BitMatrix leq;
  bool t0 = true;
};

namespace {

std::unordered_map<std::string, Element> index_labels(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Element> index;
  index.reserve(labels.size());
  for (Element i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw Error(Errc::DuplicateLabel, "label '" + labels[i] + "' appears more than once", {i});
    }
  }
  return index;
}

}  // namespace

FiniteSpace::FiniteSpace() : impl_(std::make_shared<Impl>()) {}

FiniteSpace::FiniteSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FiniteSpace FiniteSpace::from_matrix(std::vector<std::string> labels, BitMatrix leq) {
  const std::size_t n = labels.size();
  if (leq.size() != n) throw Error(Errc::ArityMismatch, "relation size does not match label count");
  auto impl = std::make_shared<Impl>();
  impl->index = index_labels(labels);
  for (Element i = 0; i < n; ++i) {
    if (!leq.test(i, i)) throw Error(Errc::InvalidRelation, "relation is not reflexive at '" + labels[i] + "'", {i});
  }
  BitMatrix closed = leq;
  closed.transitive_closure();
  if (!(closed == leq)) {
    for (Element i = 0; i < n; ++i)
      for (Element k = 0; k < n; ++k)
        if (closed.test(i, k) && !leq.test(i, k)) {
          throw Error(Errc::InvalidRelation,
                      "relation is not transitive: " + labels[i] + " <= " + labels[k] + " is implied but missing", {i, k});
        }
  }
  for (Element i = 0; i < n && impl->t0; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (leq.test(i, j) && leq.test(j, i)) {
        impl->t0 = false;
        break;
      }
  impl->labels = std::move(labels);
  impl->leq = std::move(leq);
  return FiniteSpace(std::move(impl));
}

FiniteSpace FiniteSpace::from_index_pairs(std::vector<std::string> labels,
                                          std::span<const std::pair<Element, Element>> pairs) {
  const std::size_t n = labels.size();
  auto impl = std::make_shared<Impl>();
  impl->index = index_labels(labels);
  BitMatrix leq(n);
  for (Element i = 0; i < n; ++i) leq.set(i, i);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(Errc::InvalidIndex, "relation references an element outside the space");
    leq.set(a, b);
  }
  leq.transitive_closure();
  for (Element i = 0; i < n && impl->t0; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (leq.test(i, j) && leq.test(j, i)) {
        impl->t0 = false;
        break;
      }
  impl->labels = std::move(labels);
  impl->leq = std::move(leq);
  return FiniteSpace(std::move(impl));
}

FiniteSpace FiniteSpace::from_relations(std::vector<std::string> labels, std::span<const LabelPair> pairs) {
  const auto index = index_labels(labels);
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::UnknownLabel, "relation references unknown label '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<Element, Element>> indexed;
  indexed.reserve(pairs.size());
  for (const auto& [a, b] : pairs) indexed.emplace_back(lookup(a), lookup(b));
  return from_index_pairs(std::move(labels), indexed);
}

FiniteSpace FiniteSpace::from_open_sets(std::vector<std::string> labels,
                                        const std::vector<std::vector<std::string>>& opens) {
  const auto index = index_labels(labels);
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> family;
  family.reserve(opens.size());
  for (const auto& open : opens) {
    std::vector<bool> mask(n, false);
    for (const auto& name : open) {
      auto it = index.find(name);
      if (it == index.end()) throw Error(Errc::UnknownLabel, "open set references unknown label '" + name + "'");
      mask[it->second] = true;
    }
    family.push_back(std::move(mask));
  }
  auto member = [&](const std::vector<bool>& m) {
    if (std::none_of(m.begin(), m.end(), [](bool b) { return b; })) return true;
    if (std::all_of(m.begin(), m.end(), [](bool b) { return b; })) return true;
    return std::find(family.begin(), family.end(), m) != family.end();
  };
  for (std::size_t p = 0; p < family.size(); ++p)
    for (std::size_t q = p + 1; q < family.size(); ++q) {
      std::vector<bool> both(n), either(n);
      for (std::size_t i = 0; i < n; ++i) {
        both[i] = family[p][i] && family[q][i];
        either[i] = family[p][i] || family[q][i];
      }
      if (!member(both) || !member(either)) {
        throw Error(Errc::NotATopology,
                    "open sets #" + std::to_string(p) + " and #" + std::to_string(q) +
                        " are not closed under union and intersection",
                    {p, q});
      }
    }
  // x <= y iff every open containing y contains x.
  BitMatrix leq(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      bool below = true;
      for (const auto& m : family)
        if (m[y] && !m[x]) {
          below = false;
          break;
        }
      if (below) leq.set(x, y);
    }
  return from_matrix(std::move(labels), std::move(leq));
}

std::size_t FiniteSpace::size() const noexcept { return impl_->labels.size(); }

const std::string& FiniteSpace::label(Element x) const {
  check_element(x);
  return impl_->labels[x];
}

const std::vector<std::string>& FiniteSpace::labels() const noexcept { return impl_->labels; }

std::optional<Element> FiniteSpace::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Element FiniteSpace::index_of(std::string_view label) const {
  if (auto x = find(label)) return *x;
  throw Error(Errc::UnknownLabel, "no element labelled '" + std::string(label) + "'");
}

const BitMatrix& FiniteSpace::matrix() const noexcept { return impl_->leq; }

bool FiniteSpace::is_t0() const noexcept { return impl_->t0; }

void FiniteSpace::require_t0(std::string_view context) const {
  if (is_t0()) return;
  for (Element i = 0; i < size(); ++i)
    for (Element j = i + 1; j < size(); ++j)
      if (equivalent(i, j)) {
        throw Error(Errc::NotT0,
                    std::string(context) + ": '" + label(i) + "' and '" + label(j) + "' are topologically indistinguishable",
                    {i, j});
      }
}

void FiniteSpace::check_element(Element x) const {
  if (x >= size()) throw Error(Errc::UnknownElement, "element index " + std::to_string(x) + " is out of range", {x});
}

bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->labels == b.impl_->labels && a.impl_->leq == b.impl_->leq;
}

Subspace Subspace::of(const FiniteSpace& parent, std::vector<Element> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= parent.size()) {
      throw Error(Errc::InvalidIndex, "subspace index " + std::to_string(indices[i]) + " is out of range", {indices[i]});
    }
    if (i > 0 && indices[i] == indices[i - 1]) {
      throw Error(Errc::InvalidIndex, "subspace lists '" + parent.label(indices[i]) + "' twice", {indices[i]});
    }
  }
  return Subspace(parent.size(), std::move(indices));
}

Subspace Subspace::from_labels(const FiniteSpace& parent, std::span<const std::string> labels) {
  std::vector<Element> indices;
  indices.reserve(labels.size());
  for (const auto& l : labels) indices.push_back(parent.index_of(l));
  return of(parent, std::move(indices));
}

Subspace Subspace::from_mask(const FiniteSpace& parent, const std::vector<bool>& mask) {
  if (mask.size() != parent.size()) throw Error(Errc::InvalidSubspace, "mask size does not match the space");
  ElementSet indices;
  for (Element i = 0; i < mask.size(); ++i)
    if (mask[i]) indices.push_back(i);
  return Subspace(parent.size(), std::move(indices));
}

Subspace Subspace::full(const FiniteSpace& parent) {
  ElementSet indices(parent.size());
  std::iota(indices.begin(), indices.end(), Element{0});
  return Subspace(parent.size(), std::move(indices));
}

Subspace Subspace::none(const FiniteSpace& parent) { return Subspace(parent.size(), {}); }

bool Subspace::contains(Element x) const noexcept { return std::binary_search(indices_.begin(), indices_.end(), x); }

std::vector<bool> Subspace::mask() const {
  std::vector<bool> m(parent_size_, false);
  for (Element i : indices_) m[i] = true;
  return m;
}

std::optional<std::size_t> Subspace::position(Element x) const noexcept {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), x);
  if (it == indices_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

void Subspace::check_parent(const FiniteSpace& x) const {
  if (parent_size_ != x.size()) {
    throw Error(Errc::InvalidSubspace, "subspace was built for a space of size " + std::to_string(parent_size_) +
                                           ", not " + std::to_string(x.size()));
  }
}

std::vector<ElementSet> QuotientData::classes() const {
  std::vector<ElementSet> out(quotient.size());
  for (Element x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
  return out;
}

ElementSet min_open_set(const FiniteSpace& x_space, Element x) {
  x_space.check_element(x);
  ElementSet out;
  for (Element z = 0; z < x_space.size(); ++z)
    if (x_space.leq(z, x)) out.push_back(z);
  return out;
}

ElementSet punctured_open_set(const FiniteSpace& x_space, Element x) {
  ElementSet out = min_open_set(x_space, x);
  std::erase(out, x);
  return out;
}

ElementSet point_closure(const FiniteSpace& x_space, Element x) {
  x_space.check_element(x);
  ElementSet out;
  for (Element z = 0; z < x_space.size(); ++z)
    if (x_space.leq(x, z)) out.push_back(z);
  return out;
}

FiniteSpace opposite(const FiniteSpace& x_space) {
  return FiniteSpace::from_matrix(x_space.labels(), x_space.matrix().transposed());
}

std::vector<ElementSet> connected_components(const FiniteSpace& x_space) {
  const std::size_t n = x_space.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<ElementSet> out;
  for (Element start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    const std::size_t id = out.size();
    ElementSet members;
    std::vector<Element> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      Element v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Element w = 0; w < n; ++w) {
        if (comp[w] == n && x_space.comparable(v, w)) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const FiniteSpace& x_space) { return connected_components(x_space).size() == 1; }

QuotientData kolmogorov_quotient(const FiniteSpace& x_space) {
  const std::size_t n = x_space.size();
  QuotientData q;
  q.class_of.assign(n, n);
  for (Element x = 0; x < n; ++x) {
    if (q.class_of[x] != n) continue;
    const Element c = q.representative.size();
    q.representative.push_back(x);
    for (Element y = x; y < n; ++y)
      if (x_space.equivalent(x, y)) q.class_of[y] = c;
  }
  const std::size_t k = q.representative.size();
  std::vector<std::string> labels;
  labels.reserve(k);
  BitMatrix leq(k);
  for (Element c = 0; c < k; ++c) {
    labels.push_back(x_space.label(q.representative[c]));
    for (Element d = 0; d < k; ++d)
      if (x_space.leq(q.representative[c], q.representative[d])) leq.set(c, d);
  }
  q.quotient = FiniteSpace::from_matrix(std::move(labels), std::move(leq));
  return q;
}

FiniteSpace induced_subspace(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  const auto& idx = a.indices();
  std::vector<std::string> labels;
  labels.reserve(idx.size());
  BitMatrix leq(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    labels.push_back(x_space.label(idx[i]));
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (x_space.leq(idx[i], idx[j])) leq.set(i, j);
  }
  return FiniteSpace::from_matrix(std::move(labels), std::move(leq));
}

bool is_open(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  for (Element y : a.indices())
    for (Element z = 0; z < x_space.size(); ++z)
      if (x_space.leq(z, y) && !a.contains(z)) return false;
  return true;
}

bool is_closed(const FiniteSpace& x_space, const Subspace& a) {
  a.check_parent(x_space);
  for (Element y : a.indices())
    for (Element z = 0; z < x_space.size(); ++z)
      if (x_space.leq(y, z) && !a.contains(z)) return false;
  return true;
}

ElementSet minimal_elements(const FiniteSpace& x_space) {
  ElementSet out;
  for (Element x = 0; x < x_space.size(); ++x) {
    bool minimal = true;
    for (Element z = 0; z < x_space.size() && minimal; ++z)
      if (x_space.lt(z, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::optional<Element> maximum_of(const FiniteSpace& x_space, std::span<const Element> set) {
  for (Element m : set) {
    if (std::all_of(set.begin(), set.end(), [&](Element z) { return x_space.leq(z, m); })) return m;
  }
  return std::nullopt;
}

}  // namespace fintop
