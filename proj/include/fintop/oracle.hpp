#pragma once

// Brute-force semantics for differential testing. Nothing here calls into the
// beat-point, cofibration or cylinder code; every answer comes from direct
// enumeration over the definitions.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop::oracle {

inline constexpr std::size_t kMaxRetractionSpace = 10;
inline constexpr std::size_t kMaxRetractionCandidates = 1'000'000;
inline constexpr std::size_t kMaxEnumerationSpace = 8;
inline constexpr std::size_t kMaxRandomSpace = 12;

struct RandomSpaceSpec {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  // Probability numerator / denominator for each admissible DAG edge.
  std::uint64_t edge_numerator = 1;
  std::uint64_t edge_denominator = 2;
  bool force_t0 = true;
  bool force_connected = false;
};

// All r : X -> A, continuous, identity on A, with r(x) <= x.
std::vector<SpaceMap> brute_force_retractions(const FiniteSpace& x_space, const Subspace& a);

// 𝓕(X, A) = {f : f <= Id, f∘f = f, A ⊆ f(X)}.
std::vector<SpaceMap> enumerate_F(const FiniteSpace& x_space, const Subspace& a);

// Ω(X, A): every W ⊇ A reachable from X by deleting down beat points,
// sorted by index list.
std::vector<Subspace> enumerate_Omega(const FiniteSpace& x_space, const Subspace& a);

// Number of lower covers of x inside the subspace `alive`.
std::size_t lower_cover_count(const FiniteSpace& x_space, const std::vector<bool>& alive, Element x);

FiniteSpace random_space(const RandomSpaceSpec& spec);

// Deterministic helpers on top of std::mt19937_64, whose output sequence is
// fixed by the standard (unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  bool chance(std::uint64_t numerator, std::uint64_t denominator);
  std::vector<Element> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace fintop::oracle
