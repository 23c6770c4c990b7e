#include "riesz/lattice.hpp"

#include <cmath>
#include <map>

namespace riesz {

Vec sup(const Vec& f, const Vec& g) {
  require_same_size(f, g, "sup");
  return f.cwiseMax(g);
}

Vec inf(const Vec& f, const Vec& g) {
  require_same_size(f, g, "inf");
  return f.cwiseMin(g);
}

Vec absval(const Vec& f) { return f.cwiseAbs(); }

Vec pos_part(const Vec& f) { return f.cwiseMax(Rational(0)); }

Vec neg_part(const Vec& f) { return (-f).cwiseMax(Rational(0)); }

Vec band_projection(const Vec& f, const Vec& g) {
  require_same_size(f, g, "band projection");
  return mask(g, support(f));
}

Vec band_complement(const Vec& f, const Vec& g) {
  require_same_size(f, g, "band complement");
  return mask(g, complement(support(f)));
}

Vec mask(const Vec& g, const Component& p) {
  require_size(g, p.n, "mask");
  Vec r = zero_vec(g.size());
  for (Index i = 0; i < g.size(); ++i)
    if (p.contains(i)) r(i) = g(i);
  return r;
}

Vec partial_inverse(const Vec& f) {
  Vec r = zero_vec(f.size());
  for (Index i = 0; i < f.size(); ++i)
    if (sgn(f(i)) != 0) r(i) = 1 / f(i);
  return r;
}

Vec pow_exact(const Vec& f, const Rational& p) {
  if (sgn(p) <= 0) throw ValidationError("exponent must be positive");
  Vec r(f.size());
  if (is_integer(p)) {
    const unsigned long k = mpz_get_ui(p.get_num_mpz_t());
    for (Index i = 0; i < f.size(); ++i) r(i) = pow_int(f(i), k);
    return r;
  }
  const unsigned long a = mpz_get_ui(p.get_num_mpz_t());
  const unsigned long b = mpz_get_ui(p.get_den_mpz_t());
  for (Index i = 0; i < f.size(); ++i) {
    if (sgn(f(i)) < 0)
      throw NegativeBaseError("fractional power of negative entry at point " +
                              std::to_string(i + 1));
    auto root = exact_root(pow_int(f(i), a), b);
    if (!root)
      throw NonRationalRootError("entry " + to_string(f(i)) + " has no exact " +
                                 to_string(p) + " power");
    r(i) = *root;
  }
  return r;
}

VecD pow_float(const Vec& f, double p) {
  const bool integral = p == std::floor(p);
  VecD r(f.size());
  for (Index i = 0; i < f.size(); ++i) {
    const double x = to_double(f(i));
    if (x < 0 && !integral)
      throw NegativeBaseError("fractional power of negative entry at point " +
                              std::to_string(i + 1));
    r(i) = std::pow(x, p);
  }
  return r;
}

RealizedStep step_from_vec(const Vec& f) {
  std::map<Rational, std::uint64_t> groups;
  for (Index i = 0; i < f.size(); ++i)
    if (sgn(f(i)) != 0) groups[f(i)] |= std::uint64_t{1} << i;
  RealizedStep s;
  for (const auto& [value, bits] : groups)
    s.terms.emplace_back(value, component_from_bits(f.size(), bits));
  return s;
}

Vec realize(const RealizedStep& s, Index n) {
  validate_step(s, n);
  Vec r = zero_vec(n);
  for (const auto& [value, comp] : s.terms)
    for (Index i = 0; i < n; ++i)
      if (comp.contains(i)) r(i) = value;
  return r;
}

void validate_step(const RealizedStep& s, Index n) {
  std::uint64_t seen = 0;
  for (const auto& [value, comp] : s.terms) {
    if (comp.n != n)
      throw SpaceMismatchError("step term over a different model");
    if (seen & comp.bits)
      throw ValidationError("step components overlap");
    seen |= comp.bits;
  }
}

FreudenthalResult freudenthal_sequence(const Vec& f, const Vec& u, int k) {
  require_same_size(f, u, "dyadic approximation");
  if (!is_nonneg(f)) throw ValidationError("function must be nonnegative");
  if (!is_nonneg(u)) throw ValidationError("bound must be nonnegative");
  if (k < 1) throw ValidationError("need at least one level");

  // Least c with f <= c*u. Where u vanishes f must too, otherwise no
  // multiple of u dominates f.
  Rational c = 0;
  for (Index i = 0; i < f.size(); ++i) {
    if (sgn(u(i)) == 0) {
      if (sgn(f(i)) != 0)
        throw ValidationError("no multiple of the bound dominates the function");
      continue;
    }
    c = std::max(c, Rational(f(i) / u(i)));
  }

  FreudenthalResult result;
  result.bound_scale = c;
  result.levels.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    Vec v = zero_vec(f.size());
    if (sgn(c) > 0) {
      // Dyadic floors in units of c*u keep the gap below 2^-j * c * u at
      // every point, not just where u matches the order unit.
      for (Index i = 0; i < f.size(); ++i) {
        if (sgn(u(i)) == 0 || sgn(f(i)) == 0) continue;
        const Rational unit = c * u(i);
        v(i) = dyadic_floor(f(i) / unit, static_cast<unsigned>(j)) * unit;
      }
    }
    result.levels.push_back(step_from_vec(v));
  }
  return result;
}

}  // namespace riesz
