#include "riesz/charge.hpp"

#include <functional>

namespace riesz {

namespace {

constexpr Index kMaxTablePoints = 16;
constexpr Index kMaxPartitionPoints = 10;

void require_same_operator(const Charge& mu, const Charge& nu) {
  if (!(mu.cond_exp() == nu.cond_exp()))
    throw SpaceMismatchError("charges over different operators");
}

Mat validated_atoms(const CondExp& T, Mat atoms) {
  if (atoms.rows() != T.size() || atoms.cols() != T.size())
    throw SpaceMismatchError("atom table must be square over the model");
  for (Index w = 0; w < T.size(); ++w) {
    const Vec col = atoms.col(w);
    require_in_range(T, col, "charge atom value");
  }
  return atoms;
}

}  // namespace

Charge::Charge(CondExp T, Mat atom_values)
    : Charge(std::move(T), std::move(atom_values), Vec()) {}

Charge::Charge(CondExp T, Mat atom_values, Vec unit)
    : T_(std::move(T)), atoms_(validated_atoms(T_, std::move(atom_values))) {
  if (unit.size() == 0) unit = ones_vec(T_.size());
  require_size(unit, T_.size(), "charge unit");
  for (Index i = 0; i < unit.size(); ++i)
    if (sgn(unit(i)) <= 0)
      throw ValidationError("charge unit must be strictly positive");
  unit_ = std::move(unit);
}

Vec Charge::eval(const Component& p) const {
  if (p.n != T_.size()) throw SpaceMismatchError("component over a different model");
  Vec r = zero_vec(T_.size());
  for (Index w = 0; w < T_.size(); ++w)
    if (p.contains(w)) r += atoms_.col(w);
  return r;
}

Charge zero_charge(const CondExp& T) {
  Mat atoms(T.size(), T.size());
  atoms.setZero();
  return Charge(T, std::move(atoms));
}

Charge validate_raw_charge(const CondExp& T, const RawChargeTable& table) {
  const Index n = table.n;
  if (n != T.size()) throw SpaceMismatchError("table over a different model");
  if (n > kMaxTablePoints)
    throw TooLargeError("component table beyond " + std::to_string(kMaxTablePoints) + " points");
  const std::size_t want = std::size_t{1} << n;
  if (table.values.size() != want)
    throw MissingComponentError("table must cover all " + std::to_string(want) + " components");
  for (const Vec& v : table.values)
    if (v.size() != n)
      throw MissingComponentError("table value over a different model");

  if (!is_zero(table.values[0]))
    throw NotAdditiveError("value on the empty component is nonzero", 0, 0);

  // Peeling the lowest atom: value(p) = value(atom) + value(p - atom) for
  // every p forces value(p) = sum of atom values, which gives disjoint
  // additivity for every pair.
  for (std::uint64_t m = 1; m < want; ++m) {
    if ((m & (m - 1)) == 0) continue;  // atoms have nothing to peel
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t rest = m ^ low;
    const Vec sum = table.values[low] + table.values[rest];
    if (!vec_eq(table.values[m], sum)) {
      const std::string msg =
          "additivity fails: value" + to_string(component_from_bits(n, m)) + " = " +
          to_string(table.values[m]) + " but value" + to_string(component_from_bits(n, low)) +
          " + value" + to_string(component_from_bits(n, rest)) + " = " + to_string(sum);
      throw NotAdditiveError(msg, low, rest);
    }
  }

  Mat atoms(n, n);
  for (Index w = 0; w < n; ++w) atoms.col(w) = table.values[std::size_t{1} << w];
  return Charge(T, std::move(atoms));
}

bool check_all_disjoint_pairs(const RawChargeTable& table, Component* witness_p, Component* witness_q) {
  const Index n = table.n;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t p = 0; p <= full; ++p) {
    const std::uint64_t rest = full & ~p;
    // Walk all sub-masks q of the complement of p.
    std::uint64_t q = rest;
    while (true) {
      const Vec sum = table.values[p] + table.values[q];
      if (!vec_eq(table.values[p | q], sum)) {
        if (witness_p) *witness_p = component_from_bits(n, p);
        if (witness_q) *witness_q = component_from_bits(n, q);
        return false;
      }
      if (q == 0) break;
      q = (q - 1) & rest;
    }
  }
  return true;
}

RawChargeTable table_from_charge(const Charge& mu) {
  const Index n = mu.size();
  if (n > kMaxTablePoints)
    throw TooLargeError("component table beyond " + std::to_string(kMaxTablePoints) + " points");
  RawChargeTable t;
  t.n = n;
  t.values.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    t.values.push_back(mu.eval(component_from_bits(n, m)));
  return t;
}

Vec eval_charge(const Charge& mu, const Component& p) { return mu.eval(p); }

namespace {

Charge map_atoms(const Charge& mu, const std::function<Vec(const Vec&)>& f) {
  Mat atoms(mu.size(), mu.size());
  for (Index w = 0; w < mu.size(); ++w) atoms.col(w) = f(mu.atom(w));
  return Charge(mu.cond_exp(), std::move(atoms), mu.unit());
}

Charge zip_atoms(const Charge& mu, const Charge& nu,
                 const std::function<Vec(const Vec&, const Vec&)>& f) {
  require_same_operator(mu, nu);
  Mat atoms(mu.size(), mu.size());
  for (Index w = 0; w < mu.size(); ++w) atoms.col(w) = f(mu.atom(w), nu.atom(w));
  return Charge(mu.cond_exp(), std::move(atoms), mu.unit());
}

}  // namespace

Charge charge_add(const Charge& mu, const Charge& nu) {
  return zip_atoms(mu, nu, [](const Vec& a, const Vec& b) { return Vec(a + b); });
}

Charge charge_sub(const Charge& mu, const Charge& nu) {
  return zip_atoms(mu, nu, [](const Vec& a, const Vec& b) { return Vec(a - b); });
}

Charge charge_scale(const Rational& c, const Charge& mu) {
  return map_atoms(mu, [&](const Vec& a) { return Vec(c * a); });
}

Charge charge_module_scale(const Vec& g, const Charge& mu) {
  require_in_range(mu.cond_exp(), g, "module scaling");
  return map_atoms(mu, [&](const Vec& a) { return Vec(g.cwiseProduct(a)); });
}

Charge charge_sup(const Charge& mu, const Charge& nu) {
  return zip_atoms(mu, nu, [](const Vec& a, const Vec& b) { return sup(a, b); });
}

Charge charge_inf(const Charge& mu, const Charge& nu) {
  return zip_atoms(mu, nu, [](const Vec& a, const Vec& b) { return inf(a, b); });
}

Charge charge_abs(const Charge& mu) {
  return map_atoms(mu, [](const Vec& a) { return absval(a); });
}

Charge charge_pos(const Charge& mu) {
  return map_atoms(mu, [](const Vec& a) { return pos_part(a); });
}

Charge charge_neg(const Charge& mu) {
  return map_atoms(mu, [](const Vec& a) { return neg_part(a); });
}

bool charge_eq(const Charge& mu, const Charge& nu) {
  if (!(mu.cond_exp() == nu.cond_exp())) return false;
  for (Index w = 0; w < mu.size(); ++w)
    if (!vec_eq(mu.atom(w), nu.atom(w))) return false;
  return true;
}

bool charge_leq(const Charge& mu, const Charge& nu) {
  require_same_operator(mu, nu);
  for (Index w = 0; w < mu.size(); ++w)
    if (!vec_leq(mu.atom(w), nu.atom(w))) return false;
  return true;
}

namespace {

// Entrywise sup over all sub-components q of p of expr(q, p - q).
Vec sup_over_subcomponents(const Component& p,
                           const std::function<Vec(const Component&, const Component&)>& expr) {
  std::uint64_t q = p.bits;
  Vec best;
  while (true) {
    const Component qc = component_from_bits(p.n, q);
    const Component rc = component_from_bits(p.n, p.bits & ~q);
    const Vec v = expr(qc, rc);
    best = best.size() == 0 ? v : sup(best, v);
    if (q == 0) break;
    q = (q - 1) & p.bits;
  }
  return best;
}

}  // namespace

Vec charge_sup_value_brute(const Charge& mu, const Charge& nu, const Component& p) {
  require_same_operator(mu, nu);
  return sup_over_subcomponents(p, [&](const Component& q, const Component& r) {
    return Vec(mu.eval(q) + nu.eval(r));
  });
}

Vec charge_inf_value_brute(const Charge& mu, const Charge& nu, const Component& p) {
  require_same_operator(mu, nu);
  Vec s = sup_over_subcomponents(p, [&](const Component& q, const Component& r) {
    return Vec(-(mu.eval(q) + nu.eval(r)));
  });
  return -s;
}

Vec charge_abs_value_brute(const Charge& mu, const Component& p) {
  return sup_over_subcomponents(p, [&](const Component& q, const Component& r) {
    return Vec(mu.eval(q) - mu.eval(r));
  });
}

Vec charge_pos_value_brute(const Charge& mu, const Component& p) {
  return sup_over_subcomponents(p, [&](const Component& q, const Component&) {
    return mu.eval(q);
  });
}

Vec charge_neg_value_brute(const Charge& mu, const Component& p) {
  return sup_over_subcomponents(p, [&](const Component& q, const Component&) {
    return Vec(-mu.eval(q));
  });
}

Vec charge_norm(const Charge& mu) {
  return charge_abs(mu).eval(full_component(mu.size()));
}

namespace {

void enumerate_set_partitions(Index n, const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> parts;
  std::function<void(Index)> rec = [&](Index i) {
    if (i == n) {
      visit(parts);
      return;
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      parts[j] |= std::uint64_t{1} << i;
      rec(i + 1);
      parts[j] &= ~(std::uint64_t{1} << i);
    }
    parts.push_back(std::uint64_t{1} << i);
    rec(i + 1);
    parts.pop_back();
  };
  rec(0);
}

}  // namespace

VariationResult variation_norm(const Charge& mu) {
  const Index n = mu.size();
  if (n > kMaxPartitionPoints)
    throw TooLargeError("partition enumeration beyond " +
                        std::to_string(kMaxPartitionPoints) + " points");
  VariationResult result;
  std::vector<std::vector<std::uint64_t>> attained_by;
  std::vector<Vec> sums;
  std::vector<std::vector<std::uint64_t>> partitions;
  enumerate_set_partitions(n, [&](const std::vector<std::uint64_t>& parts) {
    Vec s = zero_vec(n);
    for (std::uint64_t part : parts) s += absval(mu.eval(component_from_bits(n, part)));
    sums.push_back(std::move(s));
    partitions.push_back(parts);
  });
  result.value = sums.front();
  for (const Vec& s : sums) result.value = sup(result.value, s);
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (vec_eq(sums[k], result.value)) {
      for (std::uint64_t part : partitions[k])
        result.witness.push_back(component_from_bits(n, part));
      break;
    }
  }
  // The all-singletons partition dominates by the triangle inequality.
  Vec atom_sum = zero_vec(n);
  for (Index w = 0; w < n; ++w) atom_sum += absval(mu.atom(w));
  result.atoms_attain = vec_eq(atom_sum, result.value);
  return result;
}

Charge change_of_unit(const Charge& mu, const Vec& e2) {
  const CondExp& T = mu.cond_exp();
  require_size(e2, T.size(), "change of unit");
  for (Index i = 0; i < e2.size(); ++i)
    if (sgn(e2(i)) <= 0)
      throw ValidationError("new unit is not a weak order unit (entry " +
                            std::to_string(i + 1) + " not positive)");
  if (!vec_eq(T.apply(e2), e2))
    throw ValidationError("new unit is not fixed by the operator");
  return Charge(T, mu.atoms(), e2);
}

Vec unit_component(const Charge& mu, const Component& p) {
  return mask(mu.unit(), p);
}

AbsContinuity is_T_abs_continuous(const Charge& mu) {
  const CondExp& T = mu.cond_exp();
  for (Index w = 0; w < mu.size(); ++w) {
    const Component blk = T.block(T.block_of(w));
    if (!subset(support(mu.atom(w)), blk))
      return {false, component_from_bits(mu.size(), std::uint64_t{1} << w)};
  }
  return {true, Component{0, mu.size()}};
}

AbsContinuity is_T_abs_continuous_enum(const Charge& mu) {
  const Index n = mu.size();
  if (n > kMaxTablePoints)
    throw TooLargeError("component enumeration beyond " +
                        std::to_string(kMaxTablePoints) + " points");
  const CondExp& T = mu.cond_exp();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const Component p = component_from_bits(n, m);
    if (!subset(support(mu.eval(p)), block_closure(T, p))) return {false, p};
  }
  return {true, Component{0, n}};
}

LebesgueParts lebesgue_decomposition(const Charge& mu) {
  const CondExp& T = mu.cond_exp();
  Mat ac(mu.size(), mu.size()), sing(mu.size(), mu.size());
  for (Index w = 0; w < mu.size(); ++w) {
    const Component blk = T.block(T.block_of(w));
    const Vec a = mask(mu.atom(w), blk);
    ac.col(w) = a;
    sing.col(w) = mu.atom(w) - a;
  }
  return {Charge(T, std::move(ac), mu.unit()), Charge(T, std::move(sing), mu.unit())};
}

}  // namespace riesz
