// Acceptance gate: ten end-to-end criteria, one line of output each. Every
// comparison is exact rational arithmetic except criterion 10, whose
// tolerances are pinned below. Exit status 0 only when all ten hold.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "riesz/dual.hpp"
#include "riesz/integral.hpp"
#include "riesz/lattice.hpp"
#include "riesz/probe.hpp"
#include "riesz/sampling.hpp"

using namespace riesz;

namespace {

// Float-only tolerances (criterion 10). Everything else is exact equality.
constexpr double kProbeGapTol = 1e-6;   // relative gap accepted per instance
constexpr int kProbeShareNum = 19;      // instances within tol must be >= 19/20
constexpr int kProbeShareDen = 20;
constexpr double kCrossCheckTol = 1e-9;  // p = 2 ascent against the exact value
constexpr int kProbeRestarts = 64;
constexpr int kProbeInstances = 50;

CondExp reference_operator() {
  return CondExp(make_space({1, 1, 2}), make_partition(3, {{1, 2}, {3}}));
}

Charge positive_ac_charge(Sampler& s, const CondExp& T) { return charge_abs(s.ac_charge(T)); }

VecD to_double_vec(const Vec& f) {
  VecD out(f.size());
  for (Index i = 0; i < f.size(); ++i) out(i) = f(i).get_d();
  return out;
}

Vec sup_over_interval(const DualFunctional& phi, const DualFunctional& psi, const Vec& f) {
  const Index n = f.size();
  Vec best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Vec g = zero_vec(n);
    for (Index i = 0; i < n; ++i)
      if ((bits >> i) & 1u) g(i) = f(i);
    const Vec v = phi.eval(g) + psi.eval(f - g);
    best = best.size() == 0 ? v : sup(best, v);
  }
  return best;
}

// Entrywise square, used to compare second-power norms without roots.
Vec squared(const Vec& v) { return v.cwiseProduct(v); }

std::string criterion_charge_lattice() {
  for (Index n = 2; n <= 5; ++n) {
    Sampler s(5000 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 100; ++k) {
      const CondExp T = s.cond_exp(n);
      const Charge mu = s.charge(T);
      const Charge nu = s.charge(T);
      const Charge vsup = charge_sup(mu, nu);
      const Charge vinf = charge_inf(mu, nu);
      const Charge vabs = charge_abs(mu);
      const Charge vpos = charge_pos(mu);
      const Charge vneg = charge_neg(mu);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const Component p = component_from_bits(n, bits);
        if (!vec_eq(vsup.eval(p), charge_sup_value_brute(mu, nu, p)) ||
            !vec_eq(vinf.eval(p), charge_inf_value_brute(mu, nu, p)) ||
            !vec_eq(vabs.eval(p), charge_abs_value_brute(mu, p)) ||
            !vec_eq(vpos.eval(p), charge_pos_value_brute(mu, p)) ||
            !vec_eq(vneg.eval(p), charge_neg_value_brute(mu, p))) {
          return "mismatch at n = " + std::to_string(n) + ", pair " + std::to_string(k) +
                 ", component " + to_string(p);
        }
      }
    }
  }
  return "";
}

std::string criterion_variation_norm() {
  for (Index n = 2; n <= 5; ++n) {
    Sampler s(6000 + static_cast<std::uint64_t>(n));
    for (int k = 0; k < 100; ++k) {
      const CondExp T = s.cond_exp(n);
      const Charge mu = s.charge(T);
      const VariationResult var = variation_norm(mu);
      if (!vec_eq(var.value, charge_norm(mu))) {
        return "partition supremum " + to_string(var.value) + " differs from |mu|(e) " +
               to_string(charge_norm(mu)) + " at n = " + std::to_string(n);
      }
      if (!var.atoms_attain) return "atom partition fails to attain the variation";
    }
  }
  return "";
}

std::string criterion_well_definedness() {
  Sampler s(7001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Charge mu = s.ac_charge(T);
    const StepFunction x = s.step(T, 4);
    const WellDefinednessReport rep = well_definedness_witness(mu, x, 20, s.raw());
    if (!rep.all_agree) {
      return "continuous charge produced representation-dependent sums, trial " +
             std::to_string(rep.first_disagreement);
    }
  }

  // The counterexample half: an off-block charge must give two different
  // sums for two representations of the indicator of point 1.
  const CondExp T = reference_operator();
  Mat atoms = Mat::Zero(3, 3);
  atoms(2, 0) = 1;
  const Charge bad(T, atoms);
  const Component first = make_component(3, {1});
  const StepFunction wide(T, {StepTerm{ones_vec(3), first}});
  const StepFunction masked(T, {StepTerm{vec_of({1, 1, 0}), first}});
  if (!vec_eq(wide.realize(), masked.realize())) return "counterexample realizations differ";
  const Vec a = representation_sum(bad, wide);
  const Vec b = representation_sum(bad, masked);
  if (!vec_eq(a, vec_of({0, 0, 1})) || !vec_eq(b, vec_of({0, 0, 0}))) {
    return "counterexample sums " + to_string(a) + " and " + to_string(b) +
           " are not the pinned (0, 0, 1) and (0, 0, 0)";
  }
  return "";
}

std::string criterion_sombrero() {
  Sampler s(8001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Charge mu = positive_ac_charge(s, T);
    const Vec f = s.nonneg_vector(n);
    const SombreroReport rep = sombrero_check(mu, f, 6);
    if (!rep.all_ok) return "reported bound failure at instance " + std::to_string(k);
    for (const SombreroLevel& lvl : rep.levels) {
      const Vec gap = f - lvl.approximation;
      if (!vec_eq(gap, lvl.gap) || !is_nonneg(gap) || !vec_leq(gap, lvl.gap_bound)) {
        return "approximation bound fails at level " + std::to_string(lvl.level);
      }
      const Vec igap = integrate(mu, f) - integrate(mu, lvl.approximation);
      if (!vec_eq(igap, lvl.integral_gap) || !is_nonneg(igap) ||
          !vec_leq(igap, lvl.integral_bound)) {
        return "integral bound fails at level " + std::to_string(lvl.level);
      }
    }
  }
  return "";
}

std::string criterion_isometries() {
  Sampler s(9001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Vec f = s.vector(n);

    // 1-norm pairing: enumerate the actual ball vertices.
    const DualFunctional l1 = l1_representation(T, f);
    if (!vec_eq(dual_norm_l1_enum(l1), norm_sup(T, f))) {
      return "vertex enumeration over the 1-ball differs from the sup norm";
    }

    // 2-norm pairing: two-sided certificate instead of the closed form.
    const DualFunctional l2 = l2_representation(T, f);
    const Vec ff = norm_p_pow(T, f, 2);
    if (!vec_eq(dual_norm_l2_squared(l2), ff)) return "squared dual norm differs from T(f^2)";
    if (!vec_eq(squared(l2.eval(f)), ff.cwiseProduct(ff))) {
      return "pairing value at g = f does not attain the certified bound";
    }
    for (int j = 0; j < 10; ++j) {
      const Vec g = s.vector(n);
      if (!vec_leq(squared(l2.eval(g)), ff.cwiseProduct(norm_p_pow(T, g, 2)))) {
        return "second-power pairing bound fails at g = " + to_string(g);
      }
    }

    // sup-norm pairing: enumerate all sign vectors.
    const Charge mu = s.ac_charge(T);
    if (!vec_eq(dual_norm_linf(charge_to_linfty(mu)), charge_norm(mu))) {
      return "sign-vector enumeration differs from |mu|(e)";
    }
  }
  return "";
}

std::string criterion_round_trips() {
  Sampler s(10001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Vec f = s.vector(n);
    if (!vec_eq(l1_recover(l1_representation(T, f)), f)) return "1-norm round trip broke";
    if (!vec_eq(l2_recover(l2_representation(T, f)), f)) return "2-norm round trip broke";

    const Charge mu = s.ac_charge(T);
    if (!charge_eq(linfty_to_charge(charge_to_linfty(mu)), mu)) {
      return "charge to functional to charge round trip broke";
    }
    const DualFunctional phi = DualFunctional::from_kernel(T, s.vector(n));
    const DualFunctional back = charge_to_linfty(linfty_to_charge(phi));
    const ProductDecomposition d = product_decomposition(T);
    const DualFunctional stitched = assemble_functional(d, T, split_functional(d, phi));
    for (int j = 0; j < 5; ++j) {
      const Vec g = s.vector(n);
      if (!vec_eq(back.eval(g), phi.eval(g))) return "functional round trip broke";
      if (!vec_eq(stitched.eval(g), phi.eval(g))) return "block split and assembly broke";
    }
    if (!charge_eq(assemble_charge(d, T, split_charge(d, mu)), mu)) {
      return "charge split and assembly broke";
    }
  }
  return "";
}

std::string criterion_riesz_hom() {
  Sampler s(11001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 4));
    const CondExp T = s.cond_exp(n);
    const Charge mu = s.ac_charge(T);
    const Vec f = s.nonneg_vector(n);
    if (!vec_eq(j_modulus_brute(mu, f), integrate(charge_abs(mu), f))) {
      return "operator modulus differs from integration against |mu|";
    }
    const Vec a = s.vector(n);
    const Vec b = s.vector(n);
    const DualFunctional ra = l1_representation(T, a);
    const DualFunctional rb = l1_representation(T, b);
    const DualFunctional rsup = l1_representation(T, sup(a, b));
    const DualFunctional vee = functional_sup(ra, rb);
    for (int j = 0; j < 4; ++j) {
      const Vec u = s.nonneg_vector(n);
      const Vec brute = sup_over_interval(ra, rb, u);
      if (!vec_eq(rsup.eval(u), brute) || !vec_eq(vee.eval(u), brute)) {
        return "representation of sup(a, b) differs from the operator sup at u = " + to_string(u);
      }
    }
  }
  return "";
}

std::string criterion_lebesgue() {
  Sampler s(12001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Charge mu = s.charge(T);
    const LebesgueParts parts = lebesgue_decomposition(mu);
    if (!charge_eq(charge_add(parts.ac, parts.singular), mu)) return "parts do not sum back";
    if (!is_T_abs_continuous(parts.ac).ac) return "continuous part fails the criterion";
    if (!charge_eq(charge_inf(charge_abs(parts.ac), charge_abs(parts.singular)), zero_charge(T))) {
      return "part moduli are not disjoint";
    }
  }
  return "";
}

std::string criterion_structural() {
  Sampler s(13001);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    if (!check_proj_ineq(T, s.nonneg_vector(n))) return "support of f exceeds support of Tf";

    const Component p = s.component(n);
    if (!vec_eq(norm_sup(T, indicator(p)), indicator(block_closure(T, p)))) {
      return "sup norm of a component differs from its block closure";
    }

    const Vec alpha = s.vector(n);
    const Vec dominated = band_projection(alpha, s.vector(n));
    if (!vec_eq(mask(dominated, support(alpha)), dominated)) {
      return "band projection moved an element of its own band";
    }

    const Vec f = s.vector(n);
    const Vec g = s.vector(n);
    for (long q : {1L, 2L, kInfExponent}) {
      if (!holder_product(T, f, g, q).holds) {
        return "product bound certificate fails at exponent " + std::to_string(q);
      }
    }
  }
  return "";
}

std::string criterion_probe() {
  const CondExp T = reference_operator();
  for (double p : {1.5, 3.0, 5.0}) {
    const ProbeReport rep =
        conjecture_probe(T, p, kProbeInstances, kProbeRestarts, kProbeGapTol, 20260821);
    if (kProbeShareDen * rep.within_tol < kProbeShareNum * rep.instances) {
      std::ostringstream oss;
      oss << "p = " << p << ": only " << rep.within_tol << " of " << rep.instances
          << " probes within " << kProbeGapTol;
      return oss.str();
    }
  }

  // p = 2 has an exact answer; the ascent must reproduce it everywhere.
  Sampler s(14001);
  for (int k = 0; k < kProbeInstances; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp Tr = s.cond_exp(n);
    const Vec f = s.vector(n);
    const ProbeSample sample =
        probe_single(Tr, to_double_vec(f), 2.0, kProbeRestarts, 900 + static_cast<std::uint64_t>(k));
    const Vec exact_sq = norm_p_pow(Tr, f, 2);
    for (const BlockGap& bg : sample.blocks) {
      Index rep = 0;
      while (!Tr.block(bg.block).contains(rep)) ++rep;
      const double exact = std::sqrt(exact_sq(rep).get_d());
      if (std::abs(bg.numeric - exact) > kCrossCheckTol * std::max(1.0, exact)) {
        std::ostringstream oss;
        oss << "instance " << k << " block " << bg.block << ": ascent " << bg.numeric
            << " vs exact " << exact;
        return oss.str();
      }
    }
  }
  return "";
}

struct Criterion {
  const char* description;
  std::string (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"closed-form charge lattice equals brute-force sup/inf over sub-components",
       criterion_charge_lattice},
      {"variation norm equals the modulus charge at the unit", criterion_variation_norm},
      {"integral is representation-independent exactly for continuous charges",
       criterion_well_definedness},
      {"dyadic approximation bounds hold exactly through level 6", criterion_sombrero},
      {"dual norms match independent extreme-point enumeration", criterion_isometries},
      {"representation maps and block decomposition round trip exactly", criterion_round_trips},
      {"integration respects modulus and sup against brute-force bounds", criterion_riesz_hom},
      {"every charge splits into continuous plus singular with disjoint moduli",
       criterion_lebesgue},
      {"band projection, sup norm, and product inequalities hold exactly", criterion_structural},
      {"numeric probe matches the conjugate-exponent dual value", criterion_probe},
  };

  int failures = 0;
  int number = 0;
  for (const Criterion& c : criteria) {
    ++number;
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "criterion " << number << ": PASS - " << c.description << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << number << ": FAIL - " << c.description << " (" << detail
                << ")\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria hold" : "criteria failing: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
