#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/scalar.hpp"

namespace riesz {

using Index = Eigen::Index;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecD = Eigen::VectorXd;

// Finite measure model: points 1..n carrying rational weights. Weights are
// nonnegative; models used as ambient spaces must be strictly positive and
// callers that tolerate null points say so explicitly.
struct FiniteSpace {
  Vec weights;

  Index size() const { return weights.size(); }
  bool strictly_positive() const;
  Rational total_mass() const;

  bool operator==(const FiniteSpace& other) const;
};

FiniteSpace make_space(std::initializer_list<Rational> weights);
FiniteSpace make_space(Vec weights);

// Component of the order-unit lattice: a 0/1 vector, stored as a bit mask
// over the points. Point i corresponds to bit i (0-based internally; text
// forms are 1-based).
struct Component {
  std::uint64_t bits = 0;
  Index n = 0;

  bool contains(Index i) const { return (bits >> i) & 1u; }
  Index count() const { return static_cast<Index>(__builtin_popcountll(bits)); }
  bool empty() const { return bits == 0; }
  bool operator==(const Component& other) const = default;
};

Component make_component(Index n, std::initializer_list<Index> points_1based);
Component component_from_bits(Index n, std::uint64_t bits);
Component full_component(Index n);

Component meet(const Component& p, const Component& q);
Component join(const Component& p, const Component& q);
Component complement(const Component& p);
Component difference(const Component& p, const Component& q);
bool subset(const Component& p, const Component& q);
bool disjoint(const Component& p, const Component& q);

Vec indicator(const Component& p);
Component support(const Vec& f);
std::string to_string(const Component& p);

// Convenience constructors for dense exact vectors.
Vec vec_of(std::initializer_list<Rational> entries);
Vec zero_vec(Index n);
Vec ones_vec(Index n);
Vec unit_vec(Index n, Index i);

bool vec_eq(const Vec& a, const Vec& b);
bool vec_leq(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
bool is_nonneg(const Vec& a);
std::string to_string(const Vec& v);

void require_same_size(const Vec& a, const Vec& b, const char* what);
void require_size(const Vec& a, Index n, const char* what);

}  // namespace riesz
