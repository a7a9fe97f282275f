#pragma once

// Finite topological spaces, represented through the Alexandroff
// correspondence as finite preordered sets. Open sets are the down-sets of
// the specialization preorder, so the minimal open set of x is {z : z <= x}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fintop/error.hpp"

namespace fintop {

using Element = std::size_t;
// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;
using LabelPair = std::pair<std::string, std::string>;

// Dense n x n boolean matrix packed into 64-bit words, one padded row per
// element.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  // row(i) |= row(k)
  void or_row(std::size_t i, std::size_t k) noexcept;
  void transitive_closure() noexcept;
  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A finite set with a reflexive, transitive relation. Immutable; copies share
// the underlying storage. Element identity is positional, labels are surface
// syntax.
class FiniteSpace {
 public:
  FiniteSpace();

  // leq is the reflexive-transitive closure of `pairs`; (a, b) asserts a <= b.
  static FiniteSpace from_relations(std::vector<std::string> labels, std::span<const LabelPair> pairs);
  static FiniteSpace from_index_pairs(std::vector<std::string> labels,
                                      std::span<const std::pair<Element, Element>> pairs);
  // Specialization preorder of the topology generated by `opens` together with
  // the empty set and the whole set. The family must already be closed under
  // unions and intersections.
  static FiniteSpace from_open_sets(std::vector<std::string> labels,
                                    const std::vector<std::vector<std::string>>& opens);
  // `leq` must already be reflexive and transitive.
  static FiniteSpace from_matrix(std::vector<std::string> labels, BitMatrix leq);

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::string& label(Element x) const;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;  // throws UnknownLabel

  bool leq(Element x, Element y) const noexcept { return matrix().test(x, y); }
  bool lt(Element x, Element y) const noexcept { return leq(x, y) && !leq(y, x); }
  bool equivalent(Element x, Element y) const noexcept { return leq(x, y) && leq(y, x); }
  bool comparable(Element x, Element y) const noexcept { return leq(x, y) || leq(y, x); }
  const BitMatrix& matrix() const noexcept;

  bool is_t0() const noexcept;
  void require_t0(std::string_view context) const;
  void check_element(Element x) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b);

 private:
  struct Impl;
  explicit FiniteSpace(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// An index subset A of a FiniteSpace, denoting the induced subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace of(const FiniteSpace& parent, std::vector<Element> indices);
  static Subspace from_labels(const FiniteSpace& parent, std::span<const std::string> labels);
  static Subspace from_mask(const FiniteSpace& parent, const std::vector<bool>& mask);
  static Subspace full(const FiniteSpace& parent);
  static Subspace none(const FiniteSpace& parent);

  std::size_t parent_size() const noexcept { return parent_size_; }
  const ElementSet& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(Element x) const noexcept;
  std::vector<bool> mask() const;
  // Position of parent element x inside the induced subspace.
  std::optional<std::size_t> position(Element x) const noexcept;

  // Throws InvalidSubspace when this subspace was not built for a space of
  // X's size.
  void check_parent(const FiniteSpace& x) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t parent_size, ElementSet indices) : parent_size_(parent_size), indices_(std::move(indices)) {}
  std::size_t parent_size_ = 0;
  ElementSet indices_;
};

// The Kolmogorov quotient X_0 with the quotient map q_X and the least-index
// section.
struct QuotientData {
  FiniteSpace quotient;
  std::vector<Element> class_of;
  std::vector<Element> representative;

  std::vector<ElementSet> classes() const;
};

// U_x = {z : z <= x}
ElementSet min_open_set(const FiniteSpace& x_space, Element x);
// U_x - {x}
ElementSet punctured_open_set(const FiniteSpace& x_space, Element x);
// Closure of {x}, i.e. {z : x <= z}.
ElementSet point_closure(const FiniteSpace& x_space, Element x);

FiniteSpace opposite(const FiniteSpace& x_space);

// Components of the comparability graph, ordered by least element.
std::vector<ElementSet> connected_components(const FiniteSpace& x_space);
bool is_connected(const FiniteSpace& x_space);

QuotientData kolmogorov_quotient(const FiniteSpace& x_space);

FiniteSpace induced_subspace(const FiniteSpace& x_space, const Subspace& a);

bool is_open(const FiniteSpace& x_space, const Subspace& a);    // down-set
bool is_closed(const FiniteSpace& x_space, const Subspace& a);  // up-set

// Elements x with no z < x.
ElementSet minimal_elements(const FiniteSpace& x_space);

// If `set` has a maximum w.r.t. the order of X, return it.
std::optional<Element> maximum_of(const FiniteSpace& x_space, std::span<const Element> set);

}  // namespace fintop
