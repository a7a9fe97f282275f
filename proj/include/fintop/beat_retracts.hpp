#pragma once

// Beat points and dbp-retracts of finite T0 spaces.
//
// A is a dbp-retract of X when it is reachable from X by deleting down beat
// points one at a time. Two independent decision procedures are provided:
// the maximum criterion (every U_x ∩ A has a maximum) and exhaustive greedy
// removal. Both are exact; they are cross-checked in the test suite against a
// brute-force search for retractions r with i∘r <= Id.

#include <optional>
#include <span>
#include <vector>

#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct RetractCertificate {
  enum class Kind { Retraction, Failure };

  Kind kind = Kind::Failure;
  // r : X -> A (codomain is the induced subspace on A).
  std::optional<SpaceMap> retraction;
  // Element x whose U_x ∩ A has no maximum, and that set.
  std::optional<Element> failure_witness;
  ElementSet witness_set;

  bool ok() const noexcept { return kind == Kind::Retraction; }
};

struct RemovalStep {
  Element removed;
  Element lower_cover;  // max of the strict down-set at removal time
};
using RemovalTrace = std::vector<RemovalStep>;

struct RemovalResult {
  bool is_retract = false;
  RemovalTrace trace;
  Subspace residue;
};

struct MinimalRetract {
  Subspace retract;
  RemovalTrace trace;
};

// If x is a down beat point of the subspace `alive` (x itself alive), the
// maximum of {z alive : z < x}.
std::optional<Element> down_beat_cover(const FiniteSpace& x_space, const std::vector<bool>& alive, Element x);

ElementSet down_beat_points(const FiniteSpace& x_space);
ElementSet up_beat_points(const FiniteSpace& x_space);

// r : X -> X - {x}, r(x) = max Û_x, identity elsewhere.
SpaceMap stong_retraction(const FiniteSpace& x_space, Element x);

RetractCertificate is_dbp_retract_maxcriterion(const FiniteSpace& x_space, const Subspace& a);
RemovalResult is_dbp_retract_removal(const FiniteSpace& x_space, const Subspace& a);

// Minimum of Ω(X, A). The default removes the least-index eligible point at
// each step; the overload follows `priority` (a permutation of X) instead.
MinimalRetract minimal_dbp_retract(const FiniteSpace& x_space, const Subspace& a);
MinimalRetract minimal_dbp_retract(const FiniteSpace& x_space, const Subspace& a, std::span<const Element> priority);

// The unique f <= Id with f∘f = f and f(X) = A, i.e. i∘r.
SpaceMap canonical_idempotent(const FiniteSpace& x_space, const Subspace& a);

// Throws NotInF naming the first failed condition.
void require_in_F(const SpaceMap& f, const Subspace& a, std::string_view name = "f");

// f * g = (f∘g)^∞ on 𝓕(X, A).
SpaceMap star(const SpaceMap& f, const SpaceMap& g, const Subspace& a);
SpaceMap star(const SpaceMap& f, const SpaceMap& g);

// Retraction with i∘r >= Id, via the dual space.
RetractCertificate is_ubp_retract(const FiniteSpace& x_space, const Subspace& a);

// Certificate re-validation, used by the CLI before emitting anything.
bool validates_as_dbp_certificate(const FiniteSpace& x_space, const Subspace& a, const RetractCertificate& cert);
bool replays_as_dbp_trace(const FiniteSpace& x_space, const RemovalTrace& trace, const Subspace& expected_end);

}  // namespace fintop
