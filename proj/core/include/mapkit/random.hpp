#ifndef MAPKIT_RANDOM_HPP
#define MAPKIT_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mapkit/lang.hpp"
#include "mapkit/transition.hpp"

namespace mapkit {

/// Deterministic seeded source for the property-test and cross-check
/// generators.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : engine_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(engine_); }
  bool coin() { return below(2) == 0; }

 private:
  std::mt19937 engine_;
};

Formula random_fluent_formula(Rng& rng, const Signature& sig, int depth);
Formula random_belief_formula(Rng& rng, const Signature& sig, int depth);

/// Random pointed structure with 1..max_worlds worlds, random valuations
/// and independently sampled edges per agent.
PointedStructure random_state(Rng& rng, const SignaturePtr& sig, int max_worlds);

/// Random single-action theory of the requested kind over the signature's
/// first action, with random executability, effects or payload, and random
/// observability statements. World-altering actions get no aware_of
/// statements; sensing actions sense one fluent.
Theory random_theory(Rng& rng, const SignaturePtr& sig, ActionKind kind);

}  // namespace mapkit

#endif
