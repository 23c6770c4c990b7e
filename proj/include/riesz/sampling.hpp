#pragma once

#include <cstdint>
#include <random>

#include "riesz/charge.hpp"
#include "riesz/step.hpp"

namespace riesz {

// Deterministic instance generator. Draws come from a fixed-width engine
// reduced by modulo so the same seed yields the same instances on every
// platform; the standard distributions are not pinned down that way.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t raw() { return rng_(); }
  long int_in(long lo, long hi);  // inclusive

  // Numerators in [-9, 9], denominators in {1, 2, 3, 4}.
  Rational rational();
  Rational nonneg_rational();
  Rational positive_rational();

  Vec vector(Index n);
  Vec nonneg_vector(Index n);
  Vec positive_vector(Index n);

  FiniteSpace space(Index n);
  Partition partition(Index n);
  CondExp cond_exp(Index n);

  Component component(Index n);
  Component nonempty_component(Index n);

  Vec block_constant(const CondExp& T);

  // Arbitrary charge: any block-constant atom values.
  Charge charge(const CondExp& T);
  // Absolutely continuous charge: atom values masked to their blocks.
  Charge ac_charge(const CondExp& T);

  StepFunction step(const CondExp& T, int max_terms);

 private:
  std::mt19937_64 rng_;
};

}  // namespace riesz
