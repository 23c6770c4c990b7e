#pragma once

#include <string>
#include <vector>

#include "riesz/lattice.hpp"
#include "riesz/types.hpp"

namespace riesz {

// Partition of the points into disjoint nonempty blocks covering everything.
struct Partition {
  std::vector<Component> blocks;
};

Partition make_partition(Index n, std::initializer_list<std::initializer_list<Index>> blocks_1based);
Partition singleton_partition(Index n);
void validate_partition(const Partition& p, Index n);

// Block-averaging conditional expectation over a strictly positive finite
// model. Values in the range are exactly the block-constant vectors.
class CondExp {
 public:
  CondExp(FiniteSpace space, Partition partition);

  // Diagnostic factory: accepts arbitrary positive masses so a broken
  // operator can be fed to verify_cond_exp_axioms. Not for regular use.
  static CondExp with_masses(FiniteSpace space, Partition partition, std::vector<Rational> masses);

  Index size() const { return space_.size(); }
  Index block_count() const { return static_cast<Index>(partition_.blocks.size()); }
  const FiniteSpace& space() const { return space_; }
  const Partition& partition() const { return partition_; }
  Index block_of(Index point) const { return block_of_[static_cast<std::size_t>(point)]; }
  const Component& block(Index b) const { return partition_.blocks[static_cast<std::size_t>(b)]; }
  Rational block_mass(Index b) const { return masses_[static_cast<std::size_t>(b)]; }
  Rational weight(Index point) const { return space_.weights(point); }

  // (Tf)(w) = sum over the block of w of f*weights, divided by block mass.
  Vec apply(const Vec& f) const;

  bool operator==(const CondExp& other) const;

 private:
  CondExp() = default;
  FiniteSpace space_;
  Partition partition_;
  std::vector<Index> block_of_;
  std::vector<Rational> masses_;
};

CondExp make_cond_exp(FiniteSpace space, Partition partition);

// Range membership: block-constant vectors.
bool in_range(const CondExp& T, const Vec& v);
void require_in_range(const CondExp& T, const Vec& v, const char* what);
Rational block_value(const CondExp& T, const Vec& v, Index b);

// Union of the blocks meeting p; equals the support of T applied to the
// indicator of p.
Component block_closure(const CondExp& T, const Component& p);

struct AxiomCheck {
  std::string name;
  bool pass;
  std::string witness;  // empty when the check passes
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

// Finite verification of the operator axioms: unit, idempotence,
// linearity, positivity, strict positivity, lattice-closed range, and the
// averaging identity over a generating family.
AxiomReport verify_cond_exp_axioms(const CondExp& T);

// Model whose weights may vanish on a null set. Quarantined input type:
// the only way back into CondExp is the reduction below.
struct DegenerateModel {
  FiniteSpace space;  // weights >= 0, not all zero
  Partition partition;
};

// Averaging with zero-mass blocks sent to zero.
Vec apply_degenerate(const DegenerateModel& m, const Vec& f);

struct NullIdealReduction {
  Component null_ideal;      // zero-weight points
  Component carrier;         // complement
  CondExp reduced;           // strictly positive operator on the carrier
  std::vector<Index> kept;   // carrier points in original indexing
};

NullIdealReduction null_ideal_reduction(const DegenerateModel& m);

// R(T)-valued p-norms. norm_p_pow returns T(|f|^p) and is always exact;
// norm_p takes the blockwise p-th root and throws NonRationalRootError
// when that root leaves the rationals.
Vec norm_p_pow(const CondExp& T, const Vec& f, long p);
Vec norm_p(const CondExp& T, const Vec& f, long p);

// Least block-constant alpha with |f| <= alpha: the blockwise maximum.
Vec norm_sup(const CondExp& T, const Vec& f);

inline constexpr long kInfExponent = -1;

// Exact Hoelder certificate for the conjugate pairs with rational
// certificates: (1, inf), (2, 2), (inf, 1). Both sides are raised to
// integer powers so no roots appear.
struct HolderCertificate {
  Vec product;
  Vec lhs;         // T|fg|
  Vec lhs_form;    // compared left side
  Vec rhs_form;    // compared right side
  std::string form;
  bool holds;
};

HolderCertificate holder_product(const CondExp& T, const Vec& f, const Vec& g, long p);

// support(f) is contained in support(Tf) for f >= 0.
bool check_proj_ineq(const CondExp& T, const Vec& f);

}  // namespace riesz
