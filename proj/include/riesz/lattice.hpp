#pragma once

#include <utility>
#include <vector>

#include "riesz/types.hpp"

namespace riesz {

// Pointwise lattice structure. All binary operations reject operands of
// different sizes.
Vec sup(const Vec& f, const Vec& g);
Vec inf(const Vec& f, const Vec& g);
Vec absval(const Vec& f);
Vec pos_part(const Vec& f);
Vec neg_part(const Vec& f);

// g restricted to the support of f, and to its complement. These are the
// band projection generated by f and its disjoint complement; their sum
// gives back g.
Vec band_projection(const Vec& f, const Vec& g);
Vec band_complement(const Vec& f, const Vec& g);
Vec mask(const Vec& g, const Component& p);

// Pointwise reciprocal on the support, zero elsewhere. The defining
// identity is f * partial_inverse(f) = indicator(support(f)).
Vec partial_inverse(const Vec& f);

// f^p entrywise, exact. Integer p applies to any sign; fractional p
// requires nonnegative entries (NegativeBaseError) and exact roots
// (NonRationalRootError). p must be positive.
Vec pow_exact(const Vec& f, const Rational& p);

// f^p entrywise in floating point. Fractional p requires nonnegative
// entries. Results are approximate; callers own the tolerance.
VecD pow_float(const Vec& f, double p);

// Scalar-coefficient step function: finitely many values on pairwise
// disjoint components. Zero coefficients are dropped, so the terms need
// not cover the model.
struct RealizedStep {
  std::vector<std::pair<Rational, Component>> terms;
};

RealizedStep step_from_vec(const Vec& f);
Vec realize(const RealizedStep& s, Index n);
void validate_step(const RealizedStep& s, Index n);

// Increasing dyadic approximations s_1 <= ... <= s_k <= f from below.
// bound_scale is the least c with f <= c*u; each level satisfies
// f - s_j <= 2^-j * c * u pointwise.
struct FreudenthalResult {
  Rational bound_scale;
  std::vector<RealizedStep> levels;
};

FreudenthalResult freudenthal_sequence(const Vec& f, const Vec& u, int k);

}  // namespace riesz
