#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "riesz/dual.hpp"
#include "riesz/lattice.hpp"
#include "riesz/sampling.hpp"

using namespace riesz;

namespace {

CondExp reference_operator() {
  return CondExp(make_space({1, 1, 2}), make_partition(3, {{1, 2}, {3}}));
}

// Brute-force binary sup of functionals at f >= 0: the vertices of the
// order interval [0, f] are the masked copies of f, so the sup of
// phi(g) + psi(f - g) over the interval is a subset scan.
Vec functional_sup_brute(const DualFunctional& phi, const DualFunctional& psi, const Vec& f) {
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

}  // namespace

TEST_CASE("raw tables are validated against range homogeneity") {
  const CondExp T = reference_operator();

  Mat leak = Mat::Zero(3, 3);
  leak(2, 0) = 1;  // atom 1 sent outside its own block
  try {
    DualFunctional::from_raw(T, leak);
    FAIL("off-block table accepted");
  } catch (const NotHomogeneousError& e) {
    const std::string what = e.what();
    CHECK(what.find("indicator of block {3}") != std::string::npos);
    CHECK(what.find("atom at point 1") != std::string::npos);
    CHECK(what.find("phi(g f) = 0") != std::string::npos);
  }

  Mat skew = Mat::Zero(3, 3);
  skew(0, 0) = 1;  // (1, 0, 0) is not block-constant, hence not in the range
  CHECK_THROWS_AS(DualFunctional::from_raw(T, skew), ValidationError);

  CHECK_THROWS_AS(DualFunctional::from_raw(T, Mat::Zero(2, 2)), ValidationError);
}

TEST_CASE("the three presentations of one functional agree everywhere") {
  Sampler s(107);
  for (int k = 0; k < 80; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Vec h = s.vector(n);
    const DualFunctional as_kernel = DualFunctional::from_kernel(T, h);
    const DualFunctional as_raw = DualFunctional::from_raw(T, as_kernel.to_raw());
    const DualFunctional as_charge = DualFunctional::from_charge(linfty_to_charge(as_kernel));
    CHECK(as_kernel.kind() == FunctionalKind::kernel);
    CHECK(as_raw.kind() == FunctionalKind::raw);
    CHECK(as_charge.kind() == FunctionalKind::charge);
    for (int j = 0; j < 5; ++j) {
      const Vec f = s.vector(n);
      const Vec want = T.apply(h.cwiseProduct(f));
      CHECK(vec_eq(as_kernel.eval(f), want));
      CHECK(vec_eq(as_raw.eval(f), want));
      CHECK(vec_eq(as_charge.eval(f), want));
    }
  }
}

TEST_CASE("reference functional norms") {
  const CondExp T = reference_operator();
  const Vec h = vec_of({4, -2, 5});
  const DualFunctional phi = DualFunctional::from_kernel(T, h);
  CHECK(vec_eq(dual_norm_l1(phi), vec_of({4, 4, 5})));
  CHECK(vec_eq(dual_norm_l1_enum(phi), vec_of({4, 4, 5})));
  CHECK(vec_eq(dual_norm_l2_squared(phi), vec_of({10, 10, 25})));
  CHECK(vec_eq(dual_norm_linf(phi), vec_of({3, 3, 5})));
}

TEST_CASE("dual norm closed forms match vertex enumeration") {
  Sampler s(109);
  for (int k = 0; k < 80; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const DualFunctional phi = DualFunctional::from_kernel(T, s.vector(n));
    CHECK(vec_eq(dual_norm_l1(phi), dual_norm_l1_enum(phi)));
  }
}

TEST_CASE("representation maps are isometric and invert exactly") {
  Sampler s(113);
  for (int k = 0; k < 80; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const Vec f = s.vector(n);

    const DualFunctional l1 = l1_representation(T, f);
    CHECK(vec_eq(l1_recover(l1), f));
    CHECK(vec_eq(dual_norm_l1(l1), norm_sup(T, f)));

    const DualFunctional l2 = l2_representation(T, f);
    CHECK(vec_eq(l2_recover(l2), f));
    CHECK(vec_eq(dual_norm_l2_squared(l2), T.apply(f.cwiseProduct(f))));

    const Charge mu = s.ac_charge(T);
    const DualFunctional linf = charge_to_linfty(mu);
    CHECK(charge_eq(linfty_to_charge(linf), mu));
    CHECK(vec_eq(dual_norm_linf(linf), charge_norm(mu)));
    // The functional evaluates indicators to charge values.
    const Component p = s.component(n);
    CHECK(vec_eq(linf.eval(indicator(p)), mu.eval(p)));
  }
}

TEST_CASE("squared norms are only computed from kernels") {
  const CondExp T = reference_operator();
  const DualFunctional raw =
      DualFunctional::from_raw(T, DualFunctional::from_kernel(T, vec_of({4, -2, 5})).to_raw());
  CHECK_THROWS_AS(dual_norm_l2_squared(raw), UnsupportedError);
  const DualFunctional recovered = l2_representation(T, l2_recover(raw));
  CHECK(vec_eq(dual_norm_l2_squared(recovered), vec_of({10, 10, 25})));
}

TEST_CASE("modulus and sup of functionals match their brute-force oracles") {
  Sampler s(127);
  for (int k = 0; k < 60; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 4));
    const CondExp T = s.cond_exp(n);
    const DualFunctional phi = DualFunctional::from_kernel(T, s.vector(n));
    const DualFunctional psi = DualFunctional::from_kernel(T, s.vector(n));
    const DualFunctional mod = functional_modulus(phi);
    const DualFunctional vee = functional_sup(phi, psi);
    for (int j = 0; j < 4; ++j) {
      const Vec f = s.nonneg_vector(n);
      CHECK(vec_eq(mod.eval(f), functional_modulus_at(phi, f)));
      CHECK(vec_eq(vee.eval(f), functional_sup_brute(phi, psi, f)));
    }
    CHECK(functional_leq(phi, vee));
    CHECK(functional_leq(psi, vee));
    CHECK(functional_leq(phi, mod));
  }
  CHECK_THROWS_AS(
      functional_modulus_at(DualFunctional::from_kernel(reference_operator(), vec_of({1, 1, 1})),
                            vec_of({-1, 0, 0})),
      ValidationError);
}

TEST_CASE("functionals dominated in modulus inherit norm bounds") {
  Sampler s(131);
  for (long p : {1L, 2L, kInfExponent}) {
    for (int k = 0; k < 30; ++k) {
      const Index n = static_cast<Index>(s.int_in(2, 5));
      const CondExp T = s.cond_exp(n);
      const Vec h = s.vector(n);
      // Shrink the kernel entrywise; the modulus premise then holds.
      Vec g = h;
      for (Index i = 0; i < n; ++i) {
        const Rational denom = Rational(1) + Rational(abs(g(i)));
        g(i) = g(i) / denom;
      }
      const DualFunctional psi = DualFunctional::from_kernel(T, h);
      const DualFunctional phi = DualFunctional::from_kernel(T, g);
      std::vector<Vec> family;
      for (int j = 0; j < 6; ++j) family.push_back(s.vector(n));
      const IdealCheckReport rep = dual_ideal_check(phi, psi, p, family);
      CHECK(rep.premise_ok);
      CHECK(rep.holds);
      if (!rep.holds) MESSAGE(rep.witness);
    }
  }

  // Premise failure is reported, not silently passed.
  const CondExp T = reference_operator();
  const DualFunctional small = DualFunctional::from_kernel(T, vec_of({1, 1, 1}));
  const DualFunctional big = DualFunctional::from_kernel(T, vec_of({4, -2, 5}));
  const IdealCheckReport rep = dual_ideal_check(big, small, 1, {ones_vec(3)});
  CHECK(!rep.premise_ok);

  CHECK_THROWS_AS(dual_ideal_check(small, big, 3, {ones_vec(3)}), UnsupportedError);
}

TEST_CASE("the model splits into single-block factors") {
  const CondExp T = reference_operator();
  const ProductDecomposition d = product_decomposition(T);
  REQUIRE(d.blocks.size() == 2);
  CHECK(d.blocks[0].points == std::vector<Index>{0, 1});
  CHECK(d.blocks[1].points == std::vector<Index>{2});
  CHECK(d.blocks[0].local.size() == 2);
  CHECK(d.blocks[1].local.size() == 1);

  const Vec h = vec_of({4, -2, 5});
  const DualFunctional phi = DualFunctional::from_kernel(T, h);
  const std::vector<DualFunctional> parts = split_functional(d, phi);
  REQUIRE(parts.size() == 2);
  CHECK(vec_eq(dual_norm_l1(parts[0]), vec_of({4, 4})));
  CHECK(vec_eq(dual_norm_l1(parts[1]), vec_of({5})));

  // Norms stitch blockwise and the split assembles back to phi.
  std::vector<Vec> norms;
  for (const auto& part : parts) norms.push_back(dual_norm_l1(part));
  CHECK(vec_eq(assemble_block_values(d, 3, norms), vec_of({4, 4, 5})));
  const DualFunctional back = assemble_functional(d, T, parts);
  Sampler s(137);
  for (int j = 0; j < 10; ++j) {
    const Vec f = s.vector(3);
    CHECK(vec_eq(back.eval(f), phi.eval(f)));
  }
}

TEST_CASE("splitting and assembling are mutually inverse on random models") {
  Sampler s(139);
  for (int k = 0; k < 60; ++k) {
    const Index n = static_cast<Index>(s.int_in(2, 5));
    const CondExp T = s.cond_exp(n);
    const ProductDecomposition d = product_decomposition(T);

    const DualFunctional phi = DualFunctional::from_kernel(T, s.vector(n));
    const DualFunctional back = assemble_functional(d, T, split_functional(d, phi));
    const Vec f = s.vector(n);
    CHECK(vec_eq(back.eval(f), phi.eval(f)));

    // Restriction and zero extension are inverse on block-supported data.
    for (const BlockTriple& b : d.blocks) {
      const Vec local = restrict_to_block(b, f);
      const Vec lifted = zero_extend(b, n, local);
      CHECK(vec_eq(restrict_to_block(b, lifted), local));
    }

    const Charge mu = s.ac_charge(T);
    const Charge again = assemble_charge(d, T, split_charge(d, mu));
    CHECK(charge_eq(again, mu));

    // Dual norms of the parts stitch to the dual norm of the whole. The
    // squared norm wants kernel form, so each part is recovered first.
    std::vector<Vec> l1_parts, l2_parts;
    for (const auto& part : split_functional(d, phi)) {
      l1_parts.push_back(dual_norm_l1(part));
      const DualFunctional as_kernel =
          l2_representation(part.cond_exp(), l2_recover(part));
      l2_parts.push_back(dual_norm_l2_squared(as_kernel));
    }
    CHECK(vec_eq(assemble_block_values(d, n, l1_parts), dual_norm_l1(phi)));
    CHECK(vec_eq(assemble_block_values(d, n, l2_parts), dual_norm_l2_squared(phi)));
  }
}

TEST_CASE("charges that are not absolutely continuous are refused") {
  const CondExp T = reference_operator();
  Mat atoms = Mat::Zero(3, 3);
  atoms(2, 0) = 1;
  const Charge bad(T, atoms);
  CHECK_THROWS_AS(DualFunctional::from_charge(bad), NotAbsolutelyContinuousError);
  CHECK_THROWS_AS(split_charge(product_decomposition(T), bad), NotAbsolutelyContinuousError);
}
