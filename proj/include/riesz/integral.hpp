#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riesz/charge.hpp"
#include "riesz/step.hpp"

namespace riesz {

// Sum of coefficient * charge value over the terms of the given
// representation, with no well-definedness guard. Diagnostic only: for a
// charge that is not absolutely continuous the result depends on the
// representation.
Vec representation_sum(const Charge& mu, const StepFunction& x);

// The elementary integral. Refuses charges that are not absolutely
// continuous, because the value would depend on the representation.
Vec elementary_integral(const Charge& mu, const StepFunction& x);

struct RepresentationTrial {
  std::string how;
  Vec value;
};

struct WellDefinednessReport {
  Vec base_value;
  std::vector<RepresentationTrial> trials;
  bool all_agree;
  int first_disagreement;  // index into trials, -1 when all agree
};

// Evaluates the representation sum across randomly generated alternate
// standard representations of x (component splits and block-closure
// coefficient masks, both representation-preserving). For an absolutely
// continuous charge all values agree; otherwise a disagreement is the
// witness that the elementary integral would be ill-defined.
WellDefinednessReport well_definedness_witness(const Charge& mu, const StepFunction& x,
                                               int trials, std::uint64_t seed);

// Integral over the whole space via the four-term splitting
// over Jordan parts of mu and lattice parts of f.
Vec integrate(const Charge& mu, const Vec& f);

struct SombreroLevel {
  int level;
  Vec approximation;   // realized s_n
  Vec gap;             // f - s_n
  Vec gap_bound;       // 2^-n * alpha
  bool gap_ok;         // 0 <= gap <= bound
  Vec integral_gap;    // integral of f minus elementary integral of s_n
  Vec integral_bound;  // 2^-n * alpha * mu(e)
  bool integral_ok;
};

struct SombreroReport {
  Vec alpha;  // sup norm of f
  std::vector<SombreroLevel> levels;
  bool all_ok;
};

// Scaled dyadic approximation s_n = alpha * t_n from below, with exact
// uniform error bounds for both the function and its integral.
SombreroReport sombrero_check(const Charge& mu, const Vec& f, int levels);

struct JHomReport {
  bool modulus_ok;  // |J_mu| = J_|mu| on the test family
  bool sup_ok;      // J_(mu v nu) = J_mu v J_nu at components
  std::string witness;
};

// Riesz-homomorphism checks for the integration operator J: mu -> (f ->
// integral of f d mu). The operator modulus and binary sup are computed by
// brute force over sign patterns and sub-components.
JHomReport j_hom_check(const Charge& mu, const Charge& nu, const std::vector<Vec>& test_family);

// sup over sign patterns s of |sum s(w) f(w) mu(atom w)|: the operator
// modulus of J_mu evaluated at f >= 0.
Vec j_modulus_brute(const Charge& mu, const Vec& f);

}  // namespace riesz
