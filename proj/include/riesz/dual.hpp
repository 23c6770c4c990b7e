#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/integral.hpp"

namespace riesz {

enum class FunctionalKind { kernel, charge, raw };

// Element of a T-strong dual: a linear map into the operator range that is
// homogeneous over it. Three interchangeable presentations:
//   kernel h:  f -> T(h f)
//   charge mu: f -> integral of f d mu   (mu absolutely continuous)
//   raw M:     f -> M f, column w = image of atom w
// Raw tables are validated at construction: each column must lie in the
// range and vanish off its own block, which is exactly homogeneity.
class DualFunctional {
 public:
  static DualFunctional from_kernel(CondExp T, Vec h);
  static DualFunctional from_charge(Charge mu);
  static DualFunctional from_raw(CondExp T, Mat columns);

  FunctionalKind kind() const { return kind_; }
  const CondExp& cond_exp() const { return T_; }
  Index size() const { return T_.size(); }

  Vec eval(const Vec& f) const;
  // Atom images as columns, whatever the presentation.
  Mat to_raw() const;

  const Vec& kernel() const;
  const Charge& charge() const;

 private:
  DualFunctional(CondExp T, FunctionalKind kind) : T_(std::move(T)), kind_(kind) {}
  CondExp T_;
  FunctionalKind kind_;
  Vec kernel_;
  std::optional<Charge> charge_;
  Mat raw_;
};

// Dual norm over L^1: blockwise best normalized atom action. The
// enumeration variant walks the actual vertices of the unit ball (one
// scaled atom per block, with signs) and must agree.
Vec dual_norm_l1(const DualFunctional& phi);
Vec dual_norm_l1_enum(const DualFunctional& phi);

// Dual norm over L^inf: exact sup over the 2^n sign vectors, the vertices
// of the unit ball.
Vec dual_norm_linf(const DualFunctional& phi);

// Squared dual norm over L^2 for kernel functionals: T(h^2). Other
// presentations must be converted to kernel form first.
Vec dual_norm_l2_squared(const DualFunctional& phi);

// Representation maps and their inverses.
DualFunctional l1_representation(const CondExp& T, const Vec& f);
Vec l1_recover(const DualFunctional& phi);
DualFunctional l2_representation(const CondExp& T, const Vec& f);
Vec l2_recover(const DualFunctional& phi);
DualFunctional charge_to_linfty(const Charge& mu);
Charge linfty_to_charge(const DualFunctional& phi);

// Riesz-Kantorovich lattice structure on functionals, closed-form atomwise
// with brute-force grid oracles in the tests.
DualFunctional functional_modulus(const DualFunctional& phi);
DualFunctional functional_sup(const DualFunctional& phi, const DualFunctional& psi);
// sup over sign patterns of |phi(s f)| at f >= 0.
Vec functional_modulus_at(const DualFunctional& phi, const Vec& f);
bool functional_leq(const DualFunctional& phi, const DualFunctional& psi);

struct IdealCheckReport {
  bool premise_ok;  // |phi| <= |psi|
  bool holds;       // phi inherits psi's bound with the same constant
  std::string witness;
};

// The order-ideal property of the dual: a functional dominated in modulus
// inherits the dominator's norm bound. p is 1, 2, or kInfExponent; p = 2
// requires psi in kernel form and compares in squared form.
IdealCheckReport dual_ideal_check(const DualFunctional& phi, const DualFunctional& psi,
                                  long p, const std::vector<Vec>& family);

// Per-block restriction of the model: the block's points carry their
// weights and a single-block expectation operator.
struct BlockTriple {
  Index block;
  std::vector<Index> points;  // original indices
  CondExp local;
};

struct ProductDecomposition {
  std::vector<BlockTriple> blocks;
};

ProductDecomposition product_decomposition(const CondExp& T);

Vec restrict_to_block(const BlockTriple& b, const Vec& f);
// Zero extension of a block-local vector back to the full model.
Vec zero_extend(const BlockTriple& b, Index n, const Vec& local);

// Restriction phi_i(f) = phi(extend f) | block, and its inverse assembling
// by zero-extension sums. Round trips are exact; the assembled dual norm
// equals the blockwise norms stitched together.
std::vector<DualFunctional> split_functional(const ProductDecomposition& d, const DualFunctional& phi);
DualFunctional assemble_functional(const ProductDecomposition& d, const CondExp& T,
                                   const std::vector<DualFunctional>& parts);
std::vector<Charge> split_charge(const ProductDecomposition& d, const Charge& mu);
Charge assemble_charge(const ProductDecomposition& d, const CondExp& T, const std::vector<Charge>& parts);
// Stitch per-block range values into a full-model range value.
Vec assemble_block_values(const ProductDecomposition& d, Index n, const std::vector<Vec>& locals);

}  // namespace riesz
