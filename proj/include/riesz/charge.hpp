#pragma once

#include <vector>

#include "riesz/cond_exp.hpp"

namespace riesz {

// Finitely additive charge on the component lattice with values in the
// operator range. Stored canonically by its values on atom components;
// additivity then holds by construction and every other value is a sum.
class Charge {
 public:
  Charge(CondExp T, Mat atom_values);
  Charge(CondExp T, Mat atom_values, Vec unit);

  const CondExp& cond_exp() const { return T_; }
  Index size() const { return T_.size(); }
  const Mat& atoms() const { return atoms_; }
  Vec atom(Index w) const { return atoms_.col(w); }
  const Vec& unit() const { return unit_; }

  // Value on the component of the unit supported by p.
  Vec eval(const Component& p) const;

 private:
  CondExp T_;
  Mat atoms_;  // column w = value on atom w; each column block-constant
  Vec unit_;
};

Charge zero_charge(const CondExp& T);

// Full table over all 2^n components, indexed by bit mask. Only a
// validation input; n is capped so the table stays enumerable.
struct RawChargeTable {
  Index n = 0;
  std::vector<Vec> values;
};

// Checks the zero and disjoint-additivity axioms and returns the canonical
// atom form. Additivity is verified by peeling the lowest atom off every
// component, which forces the value of each component to be the sum of its
// atoms and hence full disjoint additivity.
Charge validate_raw_charge(const CondExp& T, const RawChargeTable& table);

// All-pairs disjoint additivity scan. Test oracle for the peeling check;
// cost grows as 3^n.
bool check_all_disjoint_pairs(const RawChargeTable& table, Component* witness_p, Component* witness_q);

RawChargeTable table_from_charge(const Charge& mu);

Vec eval_charge(const Charge& mu, const Component& p);

Charge charge_add(const Charge& mu, const Charge& nu);
Charge charge_sub(const Charge& mu, const Charge& nu);
Charge charge_scale(const Rational& c, const Charge& mu);
// Module action of a block-constant g: (g mu)(p) = g * mu(p).
Charge charge_module_scale(const Vec& g, const Charge& mu);

// Closed-form lattice structure, computed atomwise. The brute-force
// evaluations below are the oracle the closed forms are tested against.
Charge charge_sup(const Charge& mu, const Charge& nu);
Charge charge_inf(const Charge& mu, const Charge& nu);
Charge charge_abs(const Charge& mu);
Charge charge_pos(const Charge& mu);
Charge charge_neg(const Charge& mu);

bool charge_eq(const Charge& mu, const Charge& nu);
bool charge_leq(const Charge& mu, const Charge& nu);

// sup / inf over all sub-components q <= p of the defining expressions,
// taken entrywise in the range order.
Vec charge_sup_value_brute(const Charge& mu, const Charge& nu, const Component& p);
Vec charge_inf_value_brute(const Charge& mu, const Charge& nu, const Component& p);
Vec charge_abs_value_brute(const Charge& mu, const Component& p);
Vec charge_pos_value_brute(const Charge& mu, const Component& p);
Vec charge_neg_value_brute(const Charge& mu, const Component& p);

// |mu|(e).
Vec charge_norm(const Charge& mu);

struct VariationResult {
  Vec value;
  std::vector<Component> witness;  // partition attaining the value entrywise
  bool atoms_attain;               // the all-singletons partition attains it
};

// sup over all finite partitions of e of the summed moduli. Enumerates
// every set partition; guarded against blowup.
VariationResult variation_norm(const Charge& mu);

// Reinterpret mu over the component lattice of another weak order unit.
// The unit must be strictly positive and fixed by the operator. Components
// correspond by support, so the atom table is unchanged.
Charge change_of_unit(const Charge& mu, const Vec& e2);

// Component of the charge's unit supported by p.
Vec unit_component(const Charge& mu, const Component& p);

struct AbsContinuity {
  bool ac;
  Component witness;  // failing component when !ac
};

// Atomwise criterion: every atom value supported within its block.
AbsContinuity is_T_abs_continuous(const Charge& mu);
// Definition verbatim: mu(p) lies in the band of T(1_p) for every p.
AbsContinuity is_T_abs_continuous_enum(const Charge& mu);

struct LebesgueParts {
  Charge ac;
  Charge singular;
};

// mu = ac + singular with ac absolutely continuous and the moduli of the
// parts lattice-disjoint. On the finite model the band projection is the
// blockwise mask of each atom value.
LebesgueParts lebesgue_decomposition(const Charge& mu);

}  // namespace riesz
