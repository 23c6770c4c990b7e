#include "riesz/step.hpp"

namespace riesz {

StepFunction::StepFunction(CondExp T, std::vector<StepTerm> terms)
    : T_(std::move(T)), terms_(std::move(terms)) {
  std::uint64_t seen = 0;
  for (const StepTerm& t : terms_) {
    if (t.comp.n != T_.size())
      throw SpaceMismatchError("step component over a different model");
    require_in_range(T_, t.coeff, "step coefficient");
    if (seen & t.comp.bits) throw ValidationError("step components overlap");
    seen |= t.comp.bits;
  }
}

bool StepFunction::standard() const {
  std::uint64_t seen = 0;
  for (const StepTerm& t : terms_) seen |= t.comp.bits;
  return seen == full_component(T_.size()).bits;
}

Vec StepFunction::realize() const {
  Vec r = zero_vec(T_.size());
  for (const StepTerm& t : terms_)
    for (Index i = 0; i < T_.size(); ++i)
      if (t.comp.contains(i)) r(i) = t.coeff(i);
  return r;
}

StepFunction to_standard(const StepFunction& x) {
  if (x.standard()) return x;
  std::uint64_t seen = 0;
  for (const StepTerm& t : x.terms()) seen |= t.comp.bits;
  std::vector<StepTerm> terms = x.terms();
  terms.push_back({zero_vec(x.size()),
                   difference(full_component(x.size()), component_from_bits(x.size(), seen))});
  return StepFunction(x.cond_exp(), std::move(terms));
}

StepFunction step_from_function(const CondExp& T, const Vec& f) {
  require_size(f, T.size(), "step conversion");
  std::vector<StepTerm> terms;
  for (Index w = 0; w < T.size(); ++w) {
    Vec coeff(T.size());
    for (Index i = 0; i < T.size(); ++i) coeff(i) = f(w);
    terms.push_back({std::move(coeff), component_from_bits(T.size(), std::uint64_t{1} << w)});
  }
  return StepFunction(T, std::move(terms));
}

namespace {

// Cross-refinement of two standard representations, combining coefficients
// on each intersection.
template <typename Combine>
StepFunction refine(const StepFunction& x, const StepFunction& y, Combine combine) {
  if (!(x.cond_exp() == y.cond_exp()))
    throw SpaceMismatchError("step functions over different operators");
  const StepFunction xs = to_standard(x);
  const StepFunction ys = to_standard(y);
  std::vector<StepTerm> terms;
  for (const StepTerm& tx : xs.terms())
    for (const StepTerm& ty : ys.terms()) {
      const Component c = meet(tx.comp, ty.comp);
      if (c.empty()) continue;
      terms.push_back({combine(tx.coeff, ty.coeff), c});
    }
  return StepFunction(x.cond_exp(), std::move(terms));
}

}  // namespace

StepFunction step_add(const StepFunction& x, const StepFunction& y) {
  return refine(x, y, [](const Vec& a, const Vec& b) { return Vec(a + b); });
}

StepFunction step_scale(const Vec& g, const StepFunction& x) {
  require_in_range(x.cond_exp(), g, "step scaling");
  std::vector<StepTerm> terms;
  for (const StepTerm& t : x.terms())
    terms.push_back({g.cwiseProduct(t.coeff), t.comp});
  return StepFunction(x.cond_exp(), std::move(terms));
}

StepFunction step_abs(const StepFunction& x) {
  const StepFunction xs = to_standard(x);
  std::vector<StepTerm> terms;
  for (const StepTerm& t : xs.terms()) terms.push_back({absval(t.coeff), t.comp});
  return StepFunction(x.cond_exp(), std::move(terms));
}

StepFunction step_sup(const StepFunction& x, const StepFunction& y) {
  return refine(x, y, [](const Vec& a, const Vec& b) { return sup(a, b); });
}

StepFunction step_inf(const StepFunction& x, const StepFunction& y) {
  return refine(x, y, [](const Vec& a, const Vec& b) { return inf(a, b); });
}

}  // namespace riesz
