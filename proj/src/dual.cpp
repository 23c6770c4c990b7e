#include "riesz/dual.hpp"

#include <cstdint>
#include <utility>

namespace riesz {

namespace {

void validate_columns(const CondExp& T, const Mat& columns) {
  const Index n = T.size();
  if (columns.rows() != n || columns.cols() != n) {
    throw ValidationError("raw functional table must be square of the model size");
  }
  for (Index w = 0; w < n; ++w) {
    const Vec col = columns.col(w);
    require_in_range(T, col, "raw functional column");
    const Component& home = T.block(T.block_of(w));
    for (Index j = 0; j < n; ++j) {
      if (col(j) != 0 && !home.contains(j)) {
        const Component leaked = T.block(T.block_of(j));
        throw NotHomogeneousError(
            "functional is not homogeneous over the operator range: with g the "
            "indicator of block " + to_string(leaked) + " and f the atom at point " +
            std::to_string(w + 1) + ", phi(g f) = 0 but g phi(f) has value " +
            col(j).get_str() + " at point " + std::to_string(j + 1));
      }
    }
  }
}

// Every presentation has a kernel: h(w) recovers from the atom image by
// h(w) = column_w(block of w) * block mass / weight(w).
Vec kernel_from_columns(const CondExp& T, const Mat& columns) {
  Vec h = zero_vec(T.size());
  for (Index w = 0; w < T.size(); ++w) {
    const Index b = T.block_of(w);
    h(w) = block_value(T, columns.col(w), b) * T.block_mass(b) / T.weight(w);
  }
  return h;
}

}  // namespace

DualFunctional DualFunctional::from_kernel(CondExp T, Vec h) {
  require_size(h, T.size(), "kernel");
  DualFunctional phi(std::move(T), FunctionalKind::kernel);
  phi.kernel_ = std::move(h);
  return phi;
}

DualFunctional DualFunctional::from_charge(Charge mu) {
  const AbsContinuity ac = is_T_abs_continuous(mu);
  if (!ac.ac) {
    throw NotAbsolutelyContinuousError(
        "charge functionals require an absolutely continuous charge; fails on " +
            to_string(ac.witness),
        ac.witness.bits);
  }
  DualFunctional phi(mu.cond_exp(), FunctionalKind::charge);
  phi.charge_ = std::move(mu);
  return phi;
}

DualFunctional DualFunctional::from_raw(CondExp T, Mat columns) {
  validate_columns(T, columns);
  DualFunctional phi(std::move(T), FunctionalKind::raw);
  phi.raw_ = std::move(columns);
  return phi;
}

Vec DualFunctional::eval(const Vec& f) const {
  require_size(f, T_.size(), "functional argument");
  switch (kind_) {
    case FunctionalKind::kernel:
      return T_.apply(kernel_.cwiseProduct(f));
    case FunctionalKind::charge:
      return integrate(*charge_, f);
    case FunctionalKind::raw:
      return raw_ * f;
  }
  throw Error("unreachable functional kind");
}

Mat DualFunctional::to_raw() const {
  const Index n = T_.size();
  Mat columns(n, n);
  for (Index w = 0; w < n; ++w) {
    columns.col(w) = eval(unit_vec(n, w));
  }
  return columns;
}

const Vec& DualFunctional::kernel() const {
  if (kind_ != FunctionalKind::kernel) throw UnsupportedError("functional has no stored kernel");
  return kernel_;
}

const Charge& DualFunctional::charge() const {
  if (kind_ != FunctionalKind::charge) throw UnsupportedError("functional has no stored charge");
  return *charge_;
}

Vec dual_norm_l1(const DualFunctional& phi) {
  const CondExp& T = phi.cond_exp();
  const Mat columns = phi.to_raw();
  Vec best = zero_vec(T.size());
  for (Index w = 0; w < T.size(); ++w) {
    const Vec scaled = absval(columns.col(w)).cwiseProduct(partial_inverse(T.apply(unit_vec(T.size(), w))));
    best = sup(best, scaled);
  }
  return best;
}

Vec dual_norm_l1_enum(const DualFunctional& phi) {
  const CondExp& T = phi.cond_exp();
  const Index n = T.size();
  // Vertices of the unit ball: per block one scaled atom with a sign.
  std::uint64_t total = 1;
  for (Index b = 0; b < T.block_count(); ++b) {
    total *= static_cast<std::uint64_t>(2 * T.block(b).count());
    if (total > 1u << 20) throw TooLargeError("unit ball vertex count exceeds the guard");
  }
  Vec best = zero_vec(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    Vec f = zero_vec(n);
    for (Index b = 0; b < T.block_count(); ++b) {
      const Component& blk = T.block(b);
      const std::uint64_t radix = static_cast<std::uint64_t>(2 * blk.count());
      const std::uint64_t digit = rest % radix;
      rest /= radix;
      Index pick = static_cast<Index>(digit / 2);
      const int sign = (digit % 2 == 0) ? 1 : -1;
      for (Index i = 0; i < n; ++i) {
        if (!blk.contains(i)) continue;
        if (pick == 0) {
          f(i) = sign * T.block_mass(b) / T.weight(i);
          break;
        }
        --pick;
      }
    }
    best = sup(best, absval(phi.eval(f)));
  }
  return best;
}

Vec dual_norm_linf(const DualFunctional& phi) {
  const Index n = phi.size();
  if (n > 20) throw TooLargeError("sign vector enumeration beyond 2^20 points");
  Vec best = zero_vec(n);
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    Vec f(n);
    for (Index i = 0; i < n; ++i) f(i) = ((s >> i) & 1u) ? Rational(-1) : Rational(1);
    best = sup(best, absval(phi.eval(f)));
  }
  return best;
}

Vec dual_norm_l2_squared(const DualFunctional& phi) {
  if (phi.kind() != FunctionalKind::kernel) {
    throw UnsupportedError(
        "squared dual norm is computed from a kernel; recover one with l2_recover first");
  }
  const Vec& h = phi.kernel();
  return phi.cond_exp().apply(h.cwiseProduct(h));
}

DualFunctional l1_representation(const CondExp& T, const Vec& f) {
  return DualFunctional::from_kernel(T, f);
}

Vec l1_recover(const DualFunctional& phi) {
  return kernel_from_columns(phi.cond_exp(), phi.to_raw());
}

DualFunctional l2_representation(const CondExp& T, const Vec& f) {
  return DualFunctional::from_kernel(T, f);
}

Vec l2_recover(const DualFunctional& phi) {
  return kernel_from_columns(phi.cond_exp(), phi.to_raw());
}

DualFunctional charge_to_linfty(const Charge& mu) {
  return DualFunctional::from_charge(mu);
}

Charge linfty_to_charge(const DualFunctional& phi) {
  Charge mu(phi.cond_exp(), phi.to_raw());
  const AbsContinuity ac = is_T_abs_continuous(mu);
  if (!ac.ac) {
    throw Error("internal: functional produced a charge that is not absolutely continuous");
  }
  return mu;
}

DualFunctional functional_modulus(const DualFunctional& phi) {
  return DualFunctional::from_raw(phi.cond_exp(), phi.to_raw().cwiseAbs());
}

DualFunctional functional_sup(const DualFunctional& phi, const DualFunctional& psi) {
  if (!(phi.cond_exp() == psi.cond_exp())) {
    throw SpaceMismatchError("functional lattice operands live over different operators");
  }
  const Mat a = phi.to_raw();
  const Mat b = psi.to_raw();
  return DualFunctional::from_raw(phi.cond_exp(), a.cwiseMax(b));
}

Vec functional_modulus_at(const DualFunctional& phi, const Vec& f) {
  if (!is_nonneg(f)) throw ValidationError("modulus evaluation needs a nonnegative argument");
  const Index n = phi.size();
  require_size(f, n, "modulus argument");
  if (n > 20) throw TooLargeError("sign pattern enumeration beyond 2^20 points");
  Vec best = zero_vec(n);
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    Vec g = f;
    for (Index i = 0; i < n; ++i) {
      if ((s >> i) & 1u) g(i) = -g(i);
    }
    best = sup(best, absval(phi.eval(g)));
  }
  return best;
}

bool functional_leq(const DualFunctional& phi, const DualFunctional& psi) {
  if (!(phi.cond_exp() == psi.cond_exp())) {
    throw SpaceMismatchError("functional order comparison across different operators");
  }
  const Mat a = phi.to_raw();
  const Mat b = psi.to_raw();
  for (Index w = 0; w < a.cols(); ++w) {
    if (!vec_leq(a.col(w), b.col(w))) return false;
  }
  return true;
}

IdealCheckReport dual_ideal_check(const DualFunctional& phi, const DualFunctional& psi,
                                  long p, const std::vector<Vec>& family) {
  IdealCheckReport report{true, true, ""};
  const CondExp& T = phi.cond_exp();
  if (!(T == psi.cond_exp())) {
    throw SpaceMismatchError("ideal check across different operators");
  }
  if (!functional_leq(functional_modulus(phi), functional_modulus(psi))) {
    report.premise_ok = false;
    report.holds = false;
    report.witness = "premise |phi| <= |psi| fails";
    return report;
  }

  Vec bound;
  Vec bound_sq;
  if (p == 1) {
    bound = dual_norm_l1(psi);
  } else if (p == kInfExponent) {
    bound = dual_norm_linf(psi);
  } else if (p == 2) {
    bound_sq = dual_norm_l2_squared(l2_representation(T, l2_recover(psi)));
  } else {
    throw UnsupportedError("ideal check supports exponents 1, 2, and infinity");
  }

  for (const Vec& f : family) {
    const Vec af = absval(f);
    const Vec lhs = absval(phi.eval(f));
    const Vec mid_phi = functional_modulus_at(phi, af);
    const Vec mid_psi = functional_modulus_at(psi, af);
    if (!vec_leq(lhs, mid_phi)) {
      report.holds = false;
      report.witness = "|phi(f)| <= |phi|(|f|) fails at f = " + to_string(f);
      return report;
    }
    if (!vec_leq(mid_phi, mid_psi)) {
      report.holds = false;
      report.witness = "|phi|(|f|) <= |psi|(|f|) fails at f = " + to_string(f);
      return report;
    }
    bool last = false;
    if (p == 2) {
      last = vec_leq(mid_psi.cwiseProduct(mid_psi), bound_sq.cwiseProduct(T.apply(f.cwiseProduct(f))));
    } else if (p == 1) {
      last = vec_leq(mid_psi, bound.cwiseProduct(T.apply(af)));
    } else {
      last = vec_leq(mid_psi, bound.cwiseProduct(norm_sup(T, f)));
    }
    if (!last) {
      report.holds = false;
      report.witness = "|psi|(|f|) <= bound * norm fails at f = " + to_string(f);
      return report;
    }
  }
  return report;
}

ProductDecomposition product_decomposition(const CondExp& T) {
  ProductDecomposition d;
  for (Index b = 0; b < T.block_count(); ++b) {
    const Component& blk = T.block(b);
    std::vector<Index> points;
    for (Index i = 0; i < T.size(); ++i) {
      if (blk.contains(i)) points.push_back(i);
    }
    const Index m = static_cast<Index>(points.size());
    Vec w(m);
    for (Index j = 0; j < m; ++j) w(j) = T.weight(points[static_cast<std::size_t>(j)]);
    CondExp local(make_space(std::move(w)), Partition{{full_component(m)}});
    d.blocks.push_back(BlockTriple{b, std::move(points), std::move(local)});
  }
  return d;
}

Vec restrict_to_block(const BlockTriple& b, const Vec& f) {
  const Index m = static_cast<Index>(b.points.size());
  Vec out(m);
  for (Index j = 0; j < m; ++j) out(j) = f(b.points[static_cast<std::size_t>(j)]);
  return out;
}

Vec zero_extend(const BlockTriple& b, Index n, const Vec& local) {
  require_size(local, static_cast<Index>(b.points.size()), "block-local vector");
  Vec out = zero_vec(n);
  for (std::size_t j = 0; j < b.points.size(); ++j) out(b.points[j]) = local(static_cast<Index>(j));
  return out;
}

std::vector<DualFunctional> split_functional(const ProductDecomposition& d, const DualFunctional& phi) {
  const Mat columns = phi.to_raw();
  std::vector<DualFunctional> parts;
  parts.reserve(d.blocks.size());
  for (const BlockTriple& b : d.blocks) {
    const Index m = static_cast<Index>(b.points.size());
    Mat local(m, m);
    for (Index j = 0; j < m; ++j) {
      // phi_i(f) = phi(zero extension of f) restricted to the block; on the
      // atom at local index j that is the restriction of the full column.
      local.col(j) = restrict_to_block(b, columns.col(b.points[static_cast<std::size_t>(j)]));
    }
    parts.push_back(DualFunctional::from_raw(b.local, std::move(local)));
  }
  return parts;
}

DualFunctional assemble_functional(const ProductDecomposition& d, const CondExp& T,
                                   const std::vector<DualFunctional>& parts) {
  if (parts.size() != d.blocks.size()) {
    throw ValidationError("one functional per block is required");
  }
  const Index n = T.size();
  Mat columns = Mat::Zero(n, n);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const BlockTriple& b = d.blocks[k];
    if (!(parts[k].cond_exp() == b.local)) {
      throw SpaceMismatchError("part does not match its block restriction");
    }
    const Mat local = parts[k].to_raw();
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      columns.col(b.points[j]) = zero_extend(b, n, local.col(static_cast<Index>(j)));
    }
  }
  return DualFunctional::from_raw(T, std::move(columns));
}

std::vector<Charge> split_charge(const ProductDecomposition& d, const Charge& mu) {
  const AbsContinuity ac = is_T_abs_continuous(mu);
  if (!ac.ac) {
    throw NotAbsolutelyContinuousError(
        "product decomposition applies to absolutely continuous charges; fails on " +
            to_string(ac.witness),
        ac.witness.bits);
  }
  std::vector<Charge> parts;
  parts.reserve(d.blocks.size());
  for (const BlockTriple& b : d.blocks) {
    const Index m = static_cast<Index>(b.points.size());
    Mat atoms(m, m);
    for (Index j = 0; j < m; ++j) {
      atoms.col(j) = restrict_to_block(b, mu.atom(b.points[static_cast<std::size_t>(j)]));
    }
    parts.emplace_back(b.local, std::move(atoms), restrict_to_block(b, mu.unit()));
  }
  return parts;
}

Charge assemble_charge(const ProductDecomposition& d, const CondExp& T, const std::vector<Charge>& parts) {
  if (parts.size() != d.blocks.size()) {
    throw ValidationError("one charge per block is required");
  }
  const Index n = T.size();
  Mat atoms = Mat::Zero(n, n);
  Vec unit = zero_vec(n);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const BlockTriple& b = d.blocks[k];
    if (!(parts[k].cond_exp() == b.local)) {
      throw SpaceMismatchError("part does not match its block restriction");
    }
    for (std::size_t j = 0; j < b.points.size(); ++j) {
      atoms.col(b.points[j]) = zero_extend(b, n, parts[k].atom(static_cast<Index>(j)));
    }
    unit += zero_extend(b, n, parts[k].unit());
  }
  return Charge(T, std::move(atoms), std::move(unit));
}

Vec assemble_block_values(const ProductDecomposition& d, Index n, const std::vector<Vec>& locals) {
  if (locals.size() != d.blocks.size()) {
    throw ValidationError("one value per block is required");
  }
  Vec out = zero_vec(n);
  for (std::size_t k = 0; k < d.blocks.size(); ++k) {
    out += zero_extend(d.blocks[k], n, locals[k]);
  }
  return out;
}

}  // namespace riesz
