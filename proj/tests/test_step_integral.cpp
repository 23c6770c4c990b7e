#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riesz/integral.hpp"
#include "riesz/lattice.hpp"
#include "riesz/sampling.hpp"

using namespace riesz;

namespace {

CondExp reference_operator() {
  return CondExp(make_space({1, 1, 2}), make_partition(3, {{1, 2}, {3}}));
}

Charge operator_charge(const CondExp& T) {
  Mat atoms(T.size(), T.size());
  for (Index w = 0; w < T.size(); ++w) atoms.col(w) = T.apply(unit_vec(T.size(), w));
  return Charge(T, std::move(atoms));
}

// Charge sending the first atom to mass outside its own block. Not
// absolutely continuous; the canonical ill-definedness example.
Charge offblock_charge(const CondExp& T) {
  Mat atoms = Mat::Zero(3, 3);
  atoms(2, 0) = 1;
  return Charge(T, std::move(atoms));
}

}  // namespace

TEST_CASE("step functions demand disjoint components and range coefficients") {
  const CondExp T = reference_operator();
  const StepTerm on_12{vec_of({1, 1, 0}), make_component(3, {1, 2})};
  const StepTerm on_2{vec_of({2, 2, 2}), make_component(3, {2})};
  CHECK_THROWS_AS(StepFunction(T, {on_12, on_2}), ValidationError);
  CHECK_THROWS_AS(StepFunction(T, {StepTerm{vec_of({1, 2, 0}), make_component(3, {1})}}),
                  ValidationError);
  const StepFunction ok(T, {on_12});
  CHECK(vec_eq(ok.realize(), vec_of({1, 1, 0})));
  CHECK(!ok.standard());
  CHECK(to_standard(ok).standard());
  CHECK(vec_eq(to_standard(ok).realize(), ok.realize()));
}

TEST_CASE("standard forms cover the space with disjoint components") {
  Sampler s(73);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const StepFunction x = s.step(T, 4);
    const StepFunction std_x = to_standard(x);
    CHECK(std_x.standard());
    CHECK(vec_eq(std_x.realize(), x.realize()));
    Component seen{0, n};
    for (const StepTerm& t : std_x.terms()) {
      CHECK(disjoint(t.comp, seen));
      seen = join(seen, t.comp);
    }
    CHECK(seen == full_component(n));
  }
}

TEST_CASE("step arithmetic realizes to the pointwise operations") {
  Sampler s(79);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const StepFunction x = s.step(T, 4);
    const StepFunction y = s.step(T, 4);
    const Vec fx = x.realize();
    const Vec fy = y.realize();
    CHECK(vec_eq(step_add(x, y).realize(), fx + fy));
    CHECK(vec_eq(step_abs(x).realize(), absval(fx)));
    CHECK(vec_eq(step_sup(x, y).realize(), sup(fx, fy)));
    CHECK(vec_eq(step_inf(x, y).realize(), inf(fx, fy)));
    const Vec g = s.block_constant(T);
    CHECK(vec_eq(step_scale(g, x).realize(), g.cwiseProduct(fx)));
  }
  const CondExp T = reference_operator();
  const StepFunction x = step_from_function(T, vec_of({4, -2, 5}));
  CHECK(vec_eq(x.realize(), vec_of({4, -2, 5})));
  CHECK_THROWS_AS(step_scale(vec_of({1, 2, 1}), x), ValidationError);
}

TEST_CASE("integrating indicators against the averaging charge reproduces the operator") {
  const CondExp T = reference_operator();
  const Charge tmu = operator_charge(T);
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const Component p = component_from_bits(3, bits);
    const StepFunction x(T, {StepTerm{ones_vec(3), p}});
    CHECK(vec_eq(elementary_integral(tmu, x), T.apply(indicator(p))));
  }
  // And on arbitrary functions through the atomic representation.
  Sampler s(83);
  for (int k = 0; k < 50; ++k) {
    const Vec f = s.vector(3);
    CHECK(vec_eq(elementary_integral(tmu, step_from_function(T, f)), T.apply(f)));
  }
}

TEST_CASE("the representation sum is representation-independent exactly when continuous") {
  const CondExp T = reference_operator();
  const Component first = make_component(3, {1});

  // Two presentations of the indicator of point 1: the coefficient is free
  // off the component, and an off-block charge sees the difference.
  const StepFunction wide(T, {StepTerm{ones_vec(3), first}});
  const StepFunction masked(T, {StepTerm{vec_of({1, 1, 0}), first}});
  CHECK(vec_eq(wide.realize(), masked.realize()));

  const Charge bad = offblock_charge(T);
  CHECK(vec_eq(representation_sum(bad, wide), vec_of({0, 0, 1})));
  CHECK(vec_eq(representation_sum(bad, masked), vec_of({0, 0, 0})));
  CHECK_THROWS_AS(elementary_integral(bad, wide), NotAbsolutelyContinuousError);

  const WellDefinednessReport caught = well_definedness_witness(bad, wide, 20, 7);
  CHECK(!caught.all_agree);
  CHECK(caught.first_disagreement >= 0);
  CHECK(!vec_eq(caught.trials[static_cast<std::size_t>(caught.first_disagreement)].value,
                caught.base_value));

  Sampler s(89);
  for (int k = 0; k < 60; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp Tr = s.cond_exp(n);
    const Charge mu = s.ac_charge(Tr);
    const StepFunction x = s.step(Tr, 4);
    const WellDefinednessReport rep = well_definedness_witness(mu, x, 20, s.raw());
    CHECK(rep.all_agree);
    CHECK(rep.first_disagreement == -1);
    CHECK(vec_eq(rep.base_value, elementary_integral(mu, x)));
  }
}

TEST_CASE("the integral is linear, module-linear, and an atom sum") {
  Sampler s(97);
  for (int k = 0; k < 100; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Charge mu = s.ac_charge(T);
    const Vec f = s.vector(n);
    const Vec g = s.vector(n);
    const Rational c = s.rational();

    Vec atom_sum = zero_vec(n);
    for (Index w = 0; w < n; ++w) atom_sum += f(w) * mu.atom(w);
    CHECK(vec_eq(integrate(mu, f), atom_sum));

    CHECK(vec_eq(integrate(mu, f + g), integrate(mu, f) + integrate(mu, g)));
    CHECK(vec_eq(integrate(mu, Vec(c * f)), c * integrate(mu, f)));
    const Vec h = s.block_constant(T);
    CHECK(vec_eq(integrate(mu, h.cwiseProduct(f)), h.cwiseProduct(integrate(mu, f))));

    // Charge argument is additive too.
    const Charge nu = s.ac_charge(T);
    CHECK(vec_eq(integrate(charge_add(mu, nu), f), integrate(mu, f) + integrate(nu, f)));
  }
  CHECK_THROWS_AS(integrate(offblock_charge(reference_operator()), ones_vec(3)),
                  NotAbsolutelyContinuousError);
}

TEST_CASE("dyadic approximation from below with certified error bounds") {
  const CondExp T = reference_operator();
  const Charge tmu = operator_charge(T);
  const Vec f = vec_of({rat(1, 3), rat(2, 3), 1});
  const SombreroReport rep = sombrero_check(tmu, f, 3);
  CHECK(rep.all_ok);
  CHECK(vec_eq(rep.alpha, vec_of({rat(2, 3), rat(2, 3), 1})));
  // alpha^-1 f = (1/2, 1, 1) is exactly dyadic at one halving, so every
  // level reproduces f on the nose.
  for (const SombreroLevel& lvl : rep.levels) {
    CHECK(vec_eq(lvl.approximation, f));
    CHECK(is_zero(lvl.gap));
    CHECK(is_zero(lvl.integral_gap));
  }

  Sampler s(101);
  for (int k = 0; k < 40; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp Tr = s.cond_exp(n);
    const Charge mu = charge_abs(s.ac_charge(Tr));
    const Vec g = s.nonneg_vector(n);
    const SombreroReport r = sombrero_check(mu, g, 6);
    CHECK(r.all_ok);
    CHECK(static_cast<int>(r.levels.size()) == 6);
    for (const SombreroLevel& lvl : r.levels) {
      CHECK(lvl.gap_ok);
      CHECK(lvl.integral_ok);
    }
  }

  CHECK_THROWS_AS(sombrero_check(tmu, vec_of({-1, 0, 0}), 2), ValidationError);
  CHECK_THROWS_AS(sombrero_check(offblock_charge(T), ones_vec(3), 2),
                  NotAbsolutelyContinuousError);
  Mat neg = Mat::Zero(3, 3);
  neg(0, 0) = -1;
  neg(1, 0) = -1;
  CHECK_THROWS_AS(sombrero_check(Charge(T, neg), ones_vec(3), 2), ValidationError);
}

TEST_CASE("integration respects modulus and binary sup of charges") {
  Sampler s(103);
  for (int k = 0; k < 30; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 4));
    const CondExp T = s.cond_exp(n);
    const Charge mu = s.ac_charge(T);
    const Charge nu = s.ac_charge(T);
    std::vector<Vec> family;
    family.push_back(ones_vec(n));
    for (int j = 0; j < 4; ++j) family.push_back(s.nonneg_vector(n));
    const JHomReport rep = j_hom_check(mu, nu, family);
    CHECK(rep.modulus_ok);
    CHECK(rep.sup_ok);
    if (!rep.witness.empty()) MESSAGE(rep.witness);

    // The brute modulus itself: worst signed atom sum.
    const Vec f = s.nonneg_vector(n);
    CHECK(vec_eq(j_modulus_brute(mu, f), integrate(charge_abs(mu), f)));
  }
  CHECK_THROWS_AS(j_modulus_brute(operator_charge(reference_operator()), vec_of({-1, 0, 0})),
                  ValidationError);
}
