#pragma once

#include <cstdint>
#include <vector>

#include "riesz/cond_exp.hpp"

namespace riesz {

// Floating-point search for the dual-pairing value of the p-norm on one
// block: sup of |T(fg)| over the unit ball of the T-p-norm, compared to the
// conjectured closed form, the conjugate-exponent norm of f. Everything
// here is numeric evidence, not proof; exact exponents stay in cond_exp.

struct BlockGap {
  Index block = 0;
  double closed = 0;   // conjectured value on this block
  double numeric = 0;  // best pairing found by ascent
  double gap = 0;      // |closed - numeric| / max(closed, 1)
};

struct ProbeSample {
  VecD f;
  std::vector<BlockGap> blocks;
  double max_gap = 0;
  VecD best_g;  // maximizer assembled across blocks
};

struct ProbeReport {
  double p = 0;
  int instances = 0;
  int restarts = 0;
  double tol = 0;
  std::vector<ProbeSample> samples;
  double max_gap = 0;
  int within_tol = 0;

  bool all_within_tol() const { return within_tol == instances; }
};

// Projected gradient ascent on the constraint sphere for a fixed f.
// p must exceed 1 so the ball is strictly convex and the maximizer unique.
ProbeSample probe_single(const CondExp& T, const VecD& f, double p, int restarts,
                         std::uint64_t seed);

// Random instances against the given operator.
ProbeReport conjecture_probe(const CondExp& T, double p, int instances, int restarts,
                             double tol, std::uint64_t seed);

}  // namespace riesz
