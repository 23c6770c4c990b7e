#pragma once

#include <vector>

#include "riesz/cond_exp.hpp"

namespace riesz {

// One term of a step function: a block-constant coefficient on a component.
struct StepTerm {
  Vec coeff;
  Component comp;
};

// Step function with range-valued coefficients on pairwise disjoint
// components. A representation is standard when the components sum to the
// order unit; ops convert on entry.
class StepFunction {
 public:
  StepFunction(CondExp T, std::vector<StepTerm> terms);

  const CondExp& cond_exp() const { return T_; }
  const std::vector<StepTerm>& terms() const { return terms_; }
  Index size() const { return T_.size(); }

  bool standard() const;
  Vec realize() const;

 private:
  CondExp T_;
  std::vector<StepTerm> terms_;
};

StepFunction to_standard(const StepFunction& x);

// Atomic representation of an arbitrary vector: coefficient f(w)*e on each
// singleton. Every vector on a finite model is a step function.
StepFunction step_from_function(const CondExp& T, const Vec& f);

// Common-refinement arithmetic on standard representations. Realizations
// match the pointwise operations exactly.
StepFunction step_add(const StepFunction& x, const StepFunction& y);
StepFunction step_scale(const Vec& g, const StepFunction& x);  // g block-constant
StepFunction step_abs(const StepFunction& x);
StepFunction step_sup(const StepFunction& x, const StepFunction& y);
StepFunction step_inf(const StepFunction& x, const StepFunction& y);

}  // namespace riesz
