#include "riesz/probe.hpp"

#include <cmath>
#include <random>

namespace riesz {

namespace {

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

double ball_norm(const std::vector<double>& wts, const std::vector<double>& g, double p) {
  double acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += wts[i] * std::pow(std::abs(g[i]), p);
  return std::pow(acc, 1.0 / p);
}

double pairing(const std::vector<double>& c, const std::vector<double>& g) {
  double acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) acc += c[i] * g[i];
  return acc;
}

// Maximize sum c*g over the sphere sum wts*|g|^p = 1. The step must be the
// tangential part of c: stepping along c itself and renormalizing has its
// fixed point at g proportional to c, which is the maximizer only at p = 2.
double ascend(const std::vector<double>& wts, const std::vector<double>& c, double p,
              std::mt19937_64& rng, std::vector<double>& g_out) {
  const std::size_t m = c.size();
  std::vector<double> g(m), u(m), trial(m);
  for (std::size_t i = 0; i < m; ++i) {
    g[i] = static_cast<double>(static_cast<long>(rng() % 2001) - 1000) / 1000.0;
  }
  double norm = ball_norm(wts, g, p);
  if (norm < 1e-12) {
    g.assign(m, 1.0);
    norm = ball_norm(wts, g, p);
  }
  for (std::size_t i = 0; i < m; ++i) g[i] /= norm;

  double value = pairing(c, g);
  double eta = 0.5;
  for (int it = 0; it < 800 && eta > 1e-16; ++it) {
    double uu = 0;
    double cu = 0;
    for (std::size_t i = 0; i < m; ++i) {
      u[i] = p * wts[i] * std::pow(std::abs(g[i]), p - 1.0) * sgn(g[i]);
      uu += u[i] * u[i];
      cu += c[i] * u[i];
    }
    const double lambda = uu > 0 ? cu / uu : 0.0;
    bool moved = false;
    for (std::size_t i = 0; i < m; ++i) {
      trial[i] = g[i] + eta * (c[i] - lambda * u[i]);
      if (trial[i] != g[i]) moved = true;
    }
    if (!moved) break;
    const double tn = ball_norm(wts, trial, p);
    if (tn < 1e-15) {
      eta *= 0.5;
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) trial[i] /= tn;
    const double tv = pairing(c, trial);
    if (tv > value) {
      g.swap(trial);
      value = tv;
    } else {
      eta *= 0.7;
    }
  }
  g_out = g;
  return value;
}

}  // namespace

ProbeSample probe_single(const CondExp& T, const VecD& f, double p, int restarts,
                         std::uint64_t seed) {
  if (!(p > 1.0)) throw ValidationError("probe exponent must exceed 1");
  if (f.size() != T.size()) throw SpaceMismatchError("probe argument size");
  const double q = p / (p - 1.0);
  std::mt19937_64 rng(seed);

  ProbeSample sample;
  sample.f = f;
  sample.best_g = VecD::Zero(T.size());
  for (Index b = 0; b < T.block_count(); ++b) {
    const Component& blk = T.block(b);
    const double mass = to_double(T.block_mass(b));
    std::vector<Index> points;
    std::vector<double> wts, c;
    double closed_acc = 0;
    for (Index i = 0; i < T.size(); ++i) {
      if (!blk.contains(i)) continue;
      const double w = to_double(T.weight(i)) / mass;
      points.push_back(i);
      wts.push_back(w);
      c.push_back(f(i) * w);
      closed_acc += w * std::pow(std::abs(f(i)), q);
    }

    BlockGap bg;
    bg.block = b;
    bg.closed = std::pow(closed_acc, 1.0 / q);

    bool trivial = true;
    for (double ci : c) {
      if (ci != 0) trivial = false;
    }
    if (trivial) {
      bg.numeric = 0;
      bg.gap = 0;
    } else {
      double best = 0;
      std::vector<double> best_g;
      for (int r = 0; r < restarts; ++r) {
        std::vector<double> g;
        const double v = ascend(wts, c, p, rng, g);
        if (r == 0 || v > best) {
          best = v;
          best_g = g;
        }
      }
      bg.numeric = best;
      bg.gap = std::abs(bg.closed - best) / std::max(bg.closed, 1.0);
      for (std::size_t j = 0; j < points.size(); ++j) sample.best_g(points[j]) = best_g[j];
    }
    sample.max_gap = std::max(sample.max_gap, bg.gap);
    sample.blocks.push_back(bg);
  }
  return sample;
}

ProbeReport conjecture_probe(const CondExp& T, double p, int instances, int restarts,
                             double tol, std::uint64_t seed) {
  ProbeReport report;
  report.p = p;
  report.instances = instances;
  report.restarts = restarts;
  report.tol = tol;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < instances; ++k) {
    VecD f(T.size());
    bool nonzero = false;
    for (Index i = 0; i < T.size(); ++i) {
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = static_cast<long>(rng() % 4) + 1;
      f(i) = static_cast<double>(num) / static_cast<double>(den);
      if (f(i) != 0) nonzero = true;
    }
    if (!nonzero) f(0) = 1.0;
    ProbeSample sample = probe_single(T, f, p, restarts, rng());
    report.max_gap = std::max(report.max_gap, sample.max_gap);
    if (sample.max_gap <= tol) ++report.within_tol;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace riesz
