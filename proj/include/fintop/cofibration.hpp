#pragma once

// Deciding whether a map between finite spaces is a Hurewicz cofibration.
//
// An inclusion A ↪ X is a cofibration iff, after passing to the Kolmogorov
// quotient X_0, the image q(A) ∩ C is a dbp-retract of C for every connected
// component C of X_0 that meets q(A). A general map is a cofibration iff it is
// an embedding and the inclusion of its image is.

#include <cstddef>
#include <optional>
#include <vector>

#include "fintop/beat_retracts.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct ComponentCheck {
  ElementSet component;       // elements of X_0
  FiniteSpace component_space;
  Subspace target;            // q(A) ∩ C, indexed inside component_space
  RetractCertificate certificate;
};

struct CofibrationReport {
  bool verdict = false;
  bool embedding_ok = true;
  std::optional<EmbeddingCheck> embedding_witness;
  FiniteSpace source; // domain of the map (for inclusions, A itself)
  FiniteSpace space;  // the ambient space X (for maps, the codomain)
  Subspace subspace;  // A (for maps, the image)
  QuotientData quotient;
  std::vector<ComponentCheck> per_component;
  // r : X -> A with r∘i = Id_A and i∘r <= Id_X; only for connected X and
  // nonempty A.
  std::optional<SpaceMap> assembled_retraction;
};

CofibrationReport is_cofibration_inclusion(const FiniteSpace& x_space, const Subspace& a);
CofibrationReport is_cofibration_map(const SpaceMap& f);

bool is_well_pointed(const FiniteSpace& x_space, Element base);

// True when A is closed, nonempty and proper in a connected X: the inclusion
// cannot be a cofibration.
bool closed_subspace_obstruction(const FiniteSpace& x_space, const Subspace& a);

// The retraction certifying that A is a strong deformation retract. Throws
// NoCertificate when the report carries none.
SpaceMap sdr_certificate(const CofibrationReport& report);

struct BeatRemoval {
  enum class Kind { Down, Up };
  Element removed;
  Kind kind;
  Element partner;  // the unique lower (Down) or upper (Up) cover at removal time
};

struct BeatSearchResult {
  bool found = false;
  std::vector<BeatRemoval> sequence;
  std::size_t states_explored = 0;
};

// Backtracking search for a sequence of beat point removals (down or up)
// outside A that ends at A. `budget` bounds the number of distinct states
// visited; running out throws BudgetExceeded. found == false means the search
// was exhaustive.
BeatSearchResult beat_point_retract_search(const FiniteSpace& x_space, const Subspace& a, std::size_t budget);

bool replays_as_beat_sequence(const FiniteSpace& x_space, const std::vector<BeatRemoval>& sequence,
                              const Subspace& expected_end);

}  // namespace fintop
