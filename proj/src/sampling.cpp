#include "riesz/sampling.hpp"

#include <vector>

#include "riesz/lattice.hpp"

namespace riesz {

long Sampler::int_in(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational() { return rat(int_in(-9, 9), int_in(1, 4)); }

Rational Sampler::nonneg_rational() { return rat(int_in(0, 9), int_in(1, 4)); }

Rational Sampler::positive_rational() { return rat(int_in(1, 9), int_in(1, 4)); }

Vec Sampler::vector(Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = rational();
  return v;
}

Vec Sampler::nonneg_vector(Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = nonneg_rational();
  return v;
}

Vec Sampler::positive_vector(Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = positive_rational();
  return v;
}

FiniteSpace Sampler::space(Index n) { return make_space(positive_vector(n)); }

Partition Sampler::partition(Index n) {
  std::vector<std::uint64_t> urns(static_cast<std::size_t>(n), 0);
  std::vector<long> order;  // urn labels in first-appearance order
  Partition part;
  for (Index i = 0; i < n; ++i) {
    const long label = int_in(0, n - 1);
    std::size_t slot = order.size();
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order[k] == label) {
        slot = k;
        break;
      }
    }
    if (slot == order.size()) {
      order.push_back(label);
      urns[slot] = 0;
    }
    urns[slot] |= 1ull << i;
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    part.blocks.push_back(component_from_bits(n, urns[k]));
  }
  return part;
}

CondExp Sampler::cond_exp(Index n) { return CondExp(space(n), partition(n)); }

Component Sampler::component(Index n) {
  return component_from_bits(n, rng_() % (1ull << n));
}

Component Sampler::nonempty_component(Index n) {
  Component p = component(n);
  while (p.empty()) p = component(n);
  return p;
}

Vec Sampler::block_constant(const CondExp& T) {
  Vec v = zero_vec(T.size());
  for (Index b = 0; b < T.block_count(); ++b) {
    const Rational c = rational();
    const Component& blk = T.block(b);
    for (Index i = 0; i < T.size(); ++i) {
      if (blk.contains(i)) v(i) = c;
    }
  }
  return v;
}

Charge Sampler::charge(const CondExp& T) {
  Mat atoms(T.size(), T.size());
  for (Index w = 0; w < T.size(); ++w) atoms.col(w) = block_constant(T);
  return Charge(T, std::move(atoms));
}

Charge Sampler::ac_charge(const CondExp& T) {
  Mat atoms(T.size(), T.size());
  for (Index w = 0; w < T.size(); ++w) {
    atoms.col(w) = mask(block_constant(T), T.block(T.block_of(w)));
  }
  return Charge(T, std::move(atoms));
}

StepFunction Sampler::step(const CondExp& T, int max_terms) {
  const Index n = T.size();
  const long k = int_in(1, max_terms);
  const Component ground = component(n);
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(k), 0);
  for (Index i = 0; i < n; ++i) {
    if (ground.contains(i)) parts[static_cast<std::size_t>(int_in(0, k - 1))] |= 1ull << i;
  }
  std::vector<StepTerm> terms;
  for (std::uint64_t bits : parts) {
    if (bits == 0) continue;
    terms.push_back({block_constant(T), component_from_bits(n, bits)});
  }
  return StepFunction(T, std::move(terms));
}

}  // namespace riesz
