#include "riesz/integral.hpp"

#include <random>

namespace riesz {

namespace {

void require_same_operator(const Charge& mu, const StepFunction& x) {
  if (!(mu.cond_exp() == x.cond_exp()))
    throw SpaceMismatchError("charge and step function over different operators");
}

void require_ac(const Charge& mu, const char* what) {
  const AbsContinuity r = is_T_abs_continuous(mu);
  if (!r.ac)
    throw NotAbsolutelyContinuousError(
        std::string(what) + ": charge is not absolutely continuous, witness component " +
            to_string(r.witness),
        r.witness.bits);
}

}  // namespace

Vec representation_sum(const Charge& mu, const StepFunction& x) {
  require_same_operator(mu, x);
  Vec r = zero_vec(x.size());
  for (const StepTerm& t : x.terms()) r += t.coeff.cwiseProduct(mu.eval(t.comp));
  return r;
}

Vec elementary_integral(const Charge& mu, const StepFunction& x) {
  require_same_operator(mu, x);
  require_ac(mu, "elementary integral");
  return representation_sum(mu, x);
}

WellDefinednessReport well_definedness_witness(const Charge& mu, const StepFunction& x,
                                               int trials, std::uint64_t seed) {
  require_same_operator(mu, x);
  const StepFunction base = to_standard(x);
  WellDefinednessReport report;
  report.base_value = representation_sum(mu, base);
  report.all_agree = true;
  report.first_disagreement = -1;

  std::mt19937_64 rng(seed);
  const CondExp& T = x.cond_exp();
  for (int k = 0; k < trials; ++k) {
    std::vector<StepTerm> terms = base.terms();
    std::string how;
    const int mutations = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < mutations; ++m) {
      const std::size_t pick = static_cast<std::size_t>(rng() % terms.size());
      StepTerm& t = terms[pick];
      const bool can_split = t.comp.count() >= 2;
      if (can_split && rng() % 2 == 0) {
        // Split the component in two; both halves keep the coefficient.
        std::uint64_t half = 0;
        while (half == 0 || half == t.comp.bits)
          half = t.comp.bits & rng();
        const Component a = component_from_bits(t.comp.n, half);
        const Component b = difference(t.comp, a);
        how += "split " + to_string(t.comp) + "; ";
        const Vec coeff = t.coeff;
        t.comp = a;
        terms.push_back({coeff, b});
      } else {
        // Mask the coefficient outside the block closure of the component.
        // The closure indicator is block-constant and the product with the
        // component is unchanged, so this preserves the representation.
        const Component closure = block_closure(T, t.comp);
        how += "mask " + to_string(t.comp) + " to " + to_string(closure) + "; ";
        t.coeff = mask(t.coeff, closure);
      }
    }
    const StepFunction rep(T, std::move(terms));
    RepresentationTrial trial{std::move(how), representation_sum(mu, rep)};
    if (!vec_eq(trial.value, report.base_value) && report.all_agree) {
      report.all_agree = false;
      report.first_disagreement = k;
    }
    report.trials.push_back(std::move(trial));
  }
  return report;
}

Vec integrate(const Charge& mu, const Vec& f) {
  require_size(f, mu.size(), "integral");
  require_ac(mu, "integral");
  const Charge mu_pos = charge_pos(mu);
  const Charge mu_neg = charge_neg(mu);
  const StepFunction f_pos = step_from_function(mu.cond_exp(), pos_part(f));
  const StepFunction f_neg = step_from_function(mu.cond_exp(), neg_part(f));
  return representation_sum(mu_pos, f_pos) - representation_sum(mu_pos, f_neg) -
         representation_sum(mu_neg, f_pos) + representation_sum(mu_neg, f_neg);
}

SombreroReport sombrero_check(const Charge& mu, const Vec& f, int levels) {
  require_size(f, mu.size(), "approximation check");
  if (!is_nonneg(f)) throw ValidationError("approximation check needs f >= 0");
  if (!charge_leq(zero_charge(mu.cond_exp()), mu))
    throw ValidationError("approximation check needs a positive charge");
  require_ac(mu, "approximation check");

  const CondExp& T = mu.cond_exp();
  SombreroReport report;
  report.alpha = norm_sup(T, f);
  report.all_ok = true;

  // t_n approximates alpha^-1 f, which the sup norm bounds by e.
  const Vec scaled = partial_inverse(report.alpha).cwiseProduct(f);
  const FreudenthalResult fr = freudenthal_sequence(scaled, ones_vec(T.size()), levels);

  const Vec mu_e = mu.eval(full_component(T.size()));
  const Vec integral_f = integrate(mu, f);
  Rational halving(1, 2);
  for (int n = 1; n <= levels; ++n) {
    SombreroLevel lvl;
    lvl.level = n;

    // s_n = alpha * t_n with the dyadic scalars folded into range-valued
    // coefficients.
    const RealizedStep& t_n = fr.levels[static_cast<std::size_t>(n - 1)];
    std::vector<StepTerm> terms;
    for (const auto& [value, comp] : t_n.terms)
      terms.push_back({Vec(value * report.alpha), comp});
    const StepFunction s_n(T, std::move(terms));

    lvl.approximation = s_n.realize();
    lvl.gap = f - lvl.approximation;
    lvl.gap_bound = halving * report.alpha;
    lvl.gap_ok = is_nonneg(lvl.gap) && vec_leq(lvl.gap, lvl.gap_bound);

    lvl.integral_gap = integral_f - elementary_integral(mu, s_n);
    lvl.integral_bound = Vec(halving * report.alpha.cwiseProduct(mu_e));
    lvl.integral_ok = is_nonneg(lvl.integral_gap) && vec_leq(lvl.integral_gap, lvl.integral_bound);

    report.all_ok = report.all_ok && lvl.gap_ok && lvl.integral_ok;
    report.levels.push_back(std::move(lvl));
    halving /= 2;
  }
  return report;
}

Vec j_modulus_brute(const Charge& mu, const Vec& f) {
  require_size(f, mu.size(), "operator modulus");
  if (!is_nonneg(f)) throw ValidationError("operator modulus evaluated at f >= 0");
  const Index n = mu.size();
  if (n > 20) throw TooLargeError("sign-pattern enumeration beyond 20 points");
  Vec best = zero_vec(n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    Vec v = zero_vec(n);
    for (Index w = 0; w < n; ++w) {
      const Rational sign = (s >> w) & 1 ? Rational(-1) : Rational(1);
      v += sign * f(w) * mu.atom(w);
    }
    best = sup(best, absval(v));
  }
  return best;
}

JHomReport j_hom_check(const Charge& mu, const Charge& nu, const std::vector<Vec>& test_family) {
  require_ac(mu, "homomorphism check");
  require_ac(nu, "homomorphism check");
  JHomReport report{true, true, ""};

  const Charge mu_abs = charge_abs(mu);
  for (const Vec& f : test_family) {
    const Vec brute = j_modulus_brute(mu, f);
    const Vec closed = integrate(mu_abs, f);
    if (!vec_eq(brute, closed)) {
      report.modulus_ok = false;
      report.witness = "modulus mismatch at f = " + to_string(f) + ": " +
                       to_string(brute) + " vs " + to_string(closed);
      break;
    }
  }

  // Binary sup at component arguments: vertices of [0, 1_p] are the
  // sub-components, so the brute-force operator sup is a sub-component scan.
  const Index n = mu.size();
  const Charge joined = charge_sup(mu, nu);
  for (std::uint64_t pbits = 0; pbits < (std::uint64_t{1} << n) && report.sup_ok; ++pbits) {
    const Component p = component_from_bits(n, pbits);
    Vec best;
    std::uint64_t q = pbits;
    while (true) {
      const Vec v = integrate(mu, indicator(component_from_bits(n, q))) +
                    integrate(nu, indicator(component_from_bits(n, pbits & ~q)));
      best = best.size() == 0 ? v : sup(best, v);
      if (q == 0) break;
      q = (q - 1) & pbits;
    }
    const Vec closed = integrate(joined, indicator(p));
    if (!vec_eq(best, closed)) {
      report.sup_ok = false;
      report.witness = "sup mismatch at component " + to_string(p) + ": " +
                       to_string(best) + " vs " + to_string(closed);
    }
  }
  return report;
}

}  // namespace riesz
