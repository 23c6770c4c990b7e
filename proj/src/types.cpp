#include "riesz/types.hpp"

#include <sstream>

namespace riesz {

namespace {

constexpr Index kMaxPoints = 63;  // components are 64-bit masks

void require_point_count(Index n) {
  if (n < 1) throw ValidationError("model needs at least one point");
  if (n > kMaxPoints)
    throw TooLargeError("more than 63 points is not supported");
}

}  // namespace

bool FiniteSpace::strictly_positive() const {
  for (Index i = 0; i < weights.size(); ++i)
    if (sgn(weights(i)) <= 0) return false;
  return true;
}

Rational FiniteSpace::total_mass() const {
  Rational s = 0;
  for (Index i = 0; i < weights.size(); ++i) s += weights(i);
  return s;
}

bool FiniteSpace::operator==(const FiniteSpace& other) const {
  return vec_eq(weights, other.weights);
}

FiniteSpace make_space(std::initializer_list<Rational> weights) {
  return make_space(vec_of(weights));
}

FiniteSpace make_space(Vec weights) {
  require_point_count(weights.size());
  for (Index i = 0; i < weights.size(); ++i)
    if (sgn(weights(i)) < 0)
      throw ValidationError("negative weight at point " + std::to_string(i + 1));
  return FiniteSpace{std::move(weights)};
}

Component make_component(Index n, std::initializer_list<Index> points_1based) {
  require_point_count(n);
  Component p{0, n};
  for (Index i : points_1based) {
    if (i < 1 || i > n)
      throw ValidationError("point " + std::to_string(i) + " out of range");
    p.bits |= std::uint64_t{1} << (i - 1);
  }
  return p;
}

Component component_from_bits(Index n, std::uint64_t bits) {
  require_point_count(n);
  if (n < kMaxPoints && (bits >> n) != 0)
    throw ValidationError("component bits exceed model size");
  return Component{bits, n};
}

Component full_component(Index n) {
  require_point_count(n);
  return Component{(std::uint64_t{1} << n) - 1, n};
}

namespace {
void require_same_model(const Component& p, const Component& q) {
  if (p.n != q.n)
    throw SpaceMismatchError("components over different models");
}
}  // namespace

Component meet(const Component& p, const Component& q) {
  require_same_model(p, q);
  return Component{p.bits & q.bits, p.n};
}

Component join(const Component& p, const Component& q) {
  require_same_model(p, q);
  return Component{p.bits | q.bits, p.n};
}

Component complement(const Component& p) {
  return Component{full_component(p.n).bits & ~p.bits, p.n};
}

Component difference(const Component& p, const Component& q) {
  require_same_model(p, q);
  return Component{p.bits & ~q.bits, p.n};
}

bool subset(const Component& p, const Component& q) {
  require_same_model(p, q);
  return (p.bits & ~q.bits) == 0;
}

bool disjoint(const Component& p, const Component& q) {
  require_same_model(p, q);
  return (p.bits & q.bits) == 0;
}

Vec indicator(const Component& p) {
  Vec v = zero_vec(p.n);
  for (Index i = 0; i < p.n; ++i)
    if (p.contains(i)) v(i) = 1;
  return v;
}

Component support(const Vec& f) {
  require_point_count(f.size());
  Component p{0, f.size()};
  for (Index i = 0; i < f.size(); ++i)
    if (sgn(f(i)) != 0) p.bits |= std::uint64_t{1} << i;
  return p;
}

std::string to_string(const Component& p) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Index i = 0; i < p.n; ++i) {
    if (!p.contains(i)) continue;
    if (!first) out << ' ';
    out << (i + 1);
    first = false;
  }
  out << '}';
  return out.str();
}

Vec vec_of(std::initializer_list<Rational> entries) {
  Vec v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const Rational& x : entries) v(i++) = x;
  return v;
}

Vec zero_vec(Index n) {
  Vec v(n);
  v.setZero();
  return v;
}

Vec ones_vec(Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = 1;
  return v;
}

Vec unit_vec(Index n, Index i) {
  Vec v = zero_vec(n);
  v(i) = 1;
  return v;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool vec_leq(const Vec& a, const Vec& b) {
  require_same_size(a, b, "order comparison");
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) > b(i)) return false;
  return true;
}

bool is_zero(const Vec& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (sgn(a(i)) != 0) return false;
  return true;
}

bool is_nonneg(const Vec& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (sgn(a(i)) < 0) return false;
  return true;
}

std::string to_string(const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v(i).get_str();
  }
  out << ')';
  return out.str();
}

void require_same_size(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size())
    throw SpaceMismatchError(std::string(what) + ": operands over different models (" +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()) + " points)");
}

void require_size(const Vec& a, Index n, const char* what) {
  if (a.size() != n)
    throw SpaceMismatchError(std::string(what) + ": vector over a different model (" +
                             std::to_string(a.size()) + " vs " +
                             std::to_string(n) + " points)");
}

}  // namespace riesz
