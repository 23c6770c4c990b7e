#include "riesz/cond_exp.hpp"

#include <algorithm>

namespace riesz {

Partition make_partition(Index n, std::initializer_list<std::initializer_list<Index>> blocks_1based) {
  Partition p;
  for (const auto& block : blocks_1based) {
    Component c{0, n};
    for (Index i : block) {
      if (i < 1 || i > n)
        throw ValidationError("point " + std::to_string(i) + " out of range");
      c.bits |= std::uint64_t{1} << (i - 1);
    }
    p.blocks.push_back(c);
  }
  validate_partition(p, n);
  return p;
}

Partition singleton_partition(Index n) {
  Partition p;
  for (Index i = 0; i < n; ++i)
    p.blocks.push_back(component_from_bits(n, std::uint64_t{1} << i));
  return p;
}

void validate_partition(const Partition& p, Index n) {
  if (p.blocks.empty()) throw ValidationError("partition has no blocks");
  std::uint64_t seen = 0;
  for (const Component& b : p.blocks) {
    if (b.n != n) throw SpaceMismatchError("partition block over a different model");
    if (b.empty()) throw ValidationError("partition has an empty block");
    if (seen & b.bits) throw ValidationError("partition blocks overlap");
    seen |= b.bits;
  }
  if (seen != full_component(n).bits)
    throw ValidationError("partition does not cover the model");
}

CondExp::CondExp(FiniteSpace space, Partition partition) {
  validate_partition(partition, space.size());
  if (!space.strictly_positive())
    throw ValidationError("operator needs strictly positive weights");
  space_ = std::move(space);
  partition_ = std::move(partition);
  block_of_.assign(static_cast<std::size_t>(space_.size()), 0);
  masses_.reserve(partition_.blocks.size());
  for (std::size_t b = 0; b < partition_.blocks.size(); ++b) {
    Rational m = 0;
    for (Index i = 0; i < space_.size(); ++i) {
      if (!partition_.blocks[b].contains(i)) continue;
      block_of_[static_cast<std::size_t>(i)] = static_cast<Index>(b);
      m += space_.weights(i);
    }
    masses_.push_back(m);
  }
}

CondExp CondExp::with_masses(FiniteSpace space, Partition partition, std::vector<Rational> masses) {
  CondExp t(std::move(space), std::move(partition));
  if (masses.size() != t.masses_.size())
    throw ValidationError("one mass per block required");
  for (const Rational& m : masses)
    if (sgn(m) <= 0) throw ValidationError("masses must be positive");
  t.masses_ = std::move(masses);
  return t;
}

Vec CondExp::apply(const Vec& f) const {
  require_size(f, size(), "conditional expectation");
  Vec r(size());
  for (Index b = 0; b < block_count(); ++b) {
    Rational s = 0;
    for (Index i = 0; i < size(); ++i)
      if (block(b).contains(i)) s += f(i) * space_.weights(i);
    const Rational avg = s / masses_[static_cast<std::size_t>(b)];
    for (Index i = 0; i < size(); ++i)
      if (block(b).contains(i)) r(i) = avg;
  }
  return r;
}

bool CondExp::operator==(const CondExp& other) const {
  return space_ == other.space_ &&
         partition_.blocks == other.partition_.blocks && masses_ == other.masses_;
}

CondExp make_cond_exp(FiniteSpace space, Partition partition) {
  return CondExp(std::move(space), std::move(partition));
}

bool in_range(const CondExp& T, const Vec& v) {
  if (v.size() != T.size()) return false;
  for (Index b = 0; b < T.block_count(); ++b) {
    bool have = false;
    Rational value;
    for (Index i = 0; i < T.size(); ++i) {
      if (!T.block(b).contains(i)) continue;
      if (!have) {
        value = v(i);
        have = true;
      } else if (v(i) != value) {
        return false;
      }
    }
  }
  return true;
}

void require_in_range(const CondExp& T, const Vec& v, const char* what) {
  if (!in_range(T, v))
    throw ValidationError(std::string(what) + ": vector is not block-constant");
}

Rational block_value(const CondExp& T, const Vec& v, Index b) {
  for (Index i = 0; i < T.size(); ++i)
    if (T.block(b).contains(i)) return v(i);
  throw ValidationError("empty block");
}

Component block_closure(const CondExp& T, const Component& p) {
  if (p.n != T.size()) throw SpaceMismatchError("component over a different model");
  Component r{0, p.n};
  for (Index b = 0; b < T.block_count(); ++b)
    if (!disjoint(T.block(b), p)) r.bits |= T.block(b).bits;
  return r;
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

AxiomReport verify_cond_exp_axioms(const CondExp& T) {
  AxiomReport report;
  const Index n = T.size();
  const Vec e = ones_vec(n);
  auto add = [&](std::string name, bool pass, std::string witness) {
    report.checks.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
  };

  const Vec te = T.apply(e);
  add("unit", vec_eq(te, e), "T(e) = " + to_string(te));

  // The operator is linear by construction; exercise the identities on the
  // atom basis anyway so a corrupted instance cannot hide behind structure.
  bool linear = true;
  std::string linear_witness;
  for (Index i = 0; i < n && linear; ++i)
    for (Index j = 0; j < n && linear; ++j) {
      const Vec lhs = T.apply(unit_vec(n, i) + unit_vec(n, j));
      const Vec rhs = T.apply(unit_vec(n, i)) + T.apply(unit_vec(n, j));
      if (!vec_eq(lhs, rhs)) {
        linear = false;
        linear_witness = "additivity fails on atoms " + std::to_string(i + 1) +
                         ", " + std::to_string(j + 1);
      }
    }
  for (Index i = 0; i < n && linear; ++i) {
    const Vec f = unit_vec(n, i);
    if (!vec_eq(T.apply(Rational(3) * f), Rational(3) * T.apply(f))) {
      linear = false;
      linear_witness = "homogeneity fails on atom " + std::to_string(i + 1);
    }
  }
  add("linear", linear, linear_witness);

  bool positive = true, strict = true, idem = true, closed = true;
  std::string pos_w, strict_w, idem_w, closed_w;
  for (Index i = 0; i < n; ++i) {
    const Vec ti = T.apply(unit_vec(n, i));
    if (!is_nonneg(ti)) {
      positive = false;
      pos_w = "T(atom " + std::to_string(i + 1) + ") = " + to_string(ti);
    }
    if (is_zero(ti)) {
      strict = false;
      strict_w = "T kills atom " + std::to_string(i + 1);
    }
    if (!vec_eq(T.apply(ti), ti)) {
      idem = false;
      idem_w = "T^2 != T on atom " + std::to_string(i + 1) + ": " +
               to_string(T.apply(ti)) + " vs " + to_string(ti);
    }
    for (Index j = 0; j < n; ++j) {
      const Vec s = sup(ti, T.apply(unit_vec(n, j)));
      if (!in_range(T, s)) {
        closed = false;
        closed_w = "sup of images of atoms " + std::to_string(i + 1) + ", " +
                   std::to_string(j + 1) + " leaves the range";
      }
    }
  }
  add("positive", positive, pos_w);
  add("strictly-positive", strict, strict_w);
  add("idempotent", idem, idem_w);
  add("range-lattice-closed", closed, closed_w);

  // Averaging identity T(g f) = g T(f) over the generating family of block
  // indicators (plus e) against the atom basis.
  bool avg = true;
  std::string avg_w;
  std::vector<Vec> family;
  family.push_back(e);
  for (Index b = 0; b < T.block_count(); ++b)
    family.push_back(indicator(T.block(b)));
  for (const Vec& g : family) {
    for (Index i = 0; i < n && avg; ++i) {
      const Vec f = unit_vec(n, i);
      const Vec lhs = T.apply(g.cwiseProduct(f));
      const Vec rhs = g.cwiseProduct(T.apply(f));
      if (!vec_eq(lhs, rhs)) {
        avg = false;
        avg_w = "T(g f) != g T(f) for g = " + to_string(g) + ", f = atom " +
                std::to_string(i + 1);
      }
    }
  }
  add("averaging", avg, avg_w);
  return report;
}

Vec apply_degenerate(const DegenerateModel& m, const Vec& f) {
  validate_partition(m.partition, m.space.size());
  require_size(f, m.space.size(), "degenerate averaging");
  Vec r = zero_vec(m.space.size());
  for (const Component& b : m.partition.blocks) {
    Rational massb = 0, s = 0;
    for (Index i = 0; i < m.space.size(); ++i) {
      if (!b.contains(i)) continue;
      massb += m.space.weights(i);
      s += f(i) * m.space.weights(i);
    }
    if (sgn(massb) == 0) continue;  // entirely null block
    const Rational avg = s / massb;
    for (Index i = 0; i < m.space.size(); ++i)
      if (b.contains(i)) r(i) = avg;
  }
  return r;
}

NullIdealReduction null_ideal_reduction(const DegenerateModel& m) {
  validate_partition(m.partition, m.space.size());
  const Index n = m.space.size();
  Component null_ideal{0, n};
  for (Index i = 0; i < n; ++i)
    if (sgn(m.space.weights(i)) == 0) null_ideal.bits |= std::uint64_t{1} << i;
  const Component carrier = complement(null_ideal);
  if (carrier.empty()) throw ValidationError("all weights vanish");

  std::vector<Index> kept;
  for (Index i = 0; i < n; ++i)
    if (carrier.contains(i)) kept.push_back(i);
  const Index rn = static_cast<Index>(kept.size());

  Vec weights(rn);
  for (Index j = 0; j < rn; ++j) weights(j) = m.space.weights(kept[static_cast<std::size_t>(j)]);

  Partition reduced_partition;
  for (const Component& b : m.partition.blocks) {
    Component rb{0, rn};
    for (Index j = 0; j < rn; ++j)
      if (b.contains(kept[static_cast<std::size_t>(j)])) rb.bits |= std::uint64_t{1} << j;
    if (!rb.empty()) reduced_partition.blocks.push_back(rb);
  }

  return NullIdealReduction{null_ideal, carrier,
                            make_cond_exp(make_space(std::move(weights)), reduced_partition),
                            std::move(kept)};
}

Vec norm_p_pow(const CondExp& T, const Vec& f, long p) {
  if (p < 1) throw ValidationError("exponent must be a positive integer");
  return T.apply(pow_exact(absval(f), Rational(p)));
}

Vec norm_p(const CondExp& T, const Vec& f, long p) {
  const Vec powed = norm_p_pow(T, f, p);
  if (p == 1) return powed;
  Vec r(powed.size());
  for (Index b = 0; b < T.block_count(); ++b) {
    const auto root = exact_root(block_value(T, powed, b), static_cast<unsigned long>(p));
    if (!root)
      throw NonRationalRootError("block " + std::to_string(b + 1) +
                                 " norm has no exact root; use norm_p_pow");
    for (Index i = 0; i < T.size(); ++i)
      if (T.block(b).contains(i)) r(i) = *root;
  }
  return r;
}

Vec norm_sup(const CondExp& T, const Vec& f) {
  require_size(f, T.size(), "sup norm");
  const Vec a = absval(f);
  Vec r(T.size());
  for (Index b = 0; b < T.block_count(); ++b) {
    Rational m = 0;
    for (Index i = 0; i < T.size(); ++i)
      if (T.block(b).contains(i)) m = std::max(m, a(i));
    for (Index i = 0; i < T.size(); ++i)
      if (T.block(b).contains(i)) r(i) = m;
  }
  return r;
}

HolderCertificate holder_product(const CondExp& T, const Vec& f, const Vec& g, long p) {
  require_same_size(f, g, "product");
  HolderCertificate cert;
  cert.product = f.cwiseProduct(g);
  cert.lhs = norm_p_pow(T, cert.product, 1);
  if (p == 1) {
    cert.lhs_form = cert.lhs;
    cert.rhs_form = norm_p(T, f, 1).cwiseProduct(norm_sup(T, g));
    cert.form = "T|fg| <= T|f| * sup|g|";
  } else if (p == kInfExponent) {
    cert.lhs_form = cert.lhs;
    cert.rhs_form = norm_sup(T, f).cwiseProduct(norm_p(T, g, 1));
    cert.form = "T|fg| <= sup|f| * T|g|";
  } else if (p == 2) {
    // The inequality raised to the 4th power: (T|fg|)^4 <= (Tf^2)^2 (Tg^2)^2.
    cert.lhs_form = pow_exact(cert.lhs, Rational(4));
    const Vec a = pow_exact(norm_p_pow(T, f, 2), Rational(2));
    const Vec b = pow_exact(norm_p_pow(T, g, 2), Rational(2));
    cert.rhs_form = a.cwiseProduct(b);
    cert.form = "(T|fg|)^4 <= (T f^2)^2 (T g^2)^2";
  } else {
    throw UnsupportedError(
        "exact certificates exist only for exponents 1, 2, and infinity "
        "(no other conjugate pair is integral)");
  }
  cert.holds = vec_leq(cert.lhs_form, cert.rhs_form);
  return cert;
}

bool check_proj_ineq(const CondExp& T, const Vec& f) {
  if (!is_nonneg(f)) throw ValidationError("band-projection inequality needs f >= 0");
  return subset(support(f), support(T.apply(f)));
}

}  // namespace riesz
