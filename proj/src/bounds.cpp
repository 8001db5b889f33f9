#include "bdc/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "bdc/bitseq.hpp"
#include "bdc/format.hpp"

namespace bdc {

void BoundCurve::validate() const {
  if (d_grid.empty() || d_grid.size() != values.size()) {
    throw std::invalid_argument("BoundCurve: grid/value size mismatch");
  }
  for (std::size_t i = 0; i + 1 < d_grid.size(); ++i) {
    if (!(d_grid[i] < d_grid[i + 1])) {
      throw std::invalid_argument("BoundCurve: grid not strictly increasing");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("BoundCurve: non-finite value");
  }
}

TwoBitDistribution::TwoBitDistribution(double p0, double p1, double p2, double p3)
    : p0(p0), p1(p1), p2(p2), p3(p3) {
  if (std::abs(p0 + p1 + p2 + p3 - 1.0) > 1e-12 || std::abs(p0 - p3) > 1e-12 ||
      std::abs(p1 - p2) > 1e-12 || std::abs(p0 + p1 - 0.5) > 1e-12) {
    throw std::invalid_argument("TwoBitDistribution: symmetry violated");
  }
}

double t_bound(int L, DeletionProb d, const FTable& f) {
  if (L < 1) throw std::domain_error("t_bound: L < 1");
  double acc = 0.0;
  for (int i = 0; i <= L; ++i) {
    const auto it = f.find({L, L - i});
    if (it == f.end()) throw std::domain_error("t_bound: missing f entry");
    acc += deletion_count_prob(L, i, d) * it->second;
  }
  return acc / static_cast<double>(L);
}

std::vector<double> extend_t_bounds(double t_L, int L, DeletionProb d, int steps) {
  if (L < 1) throw std::domain_error("extend_t_bounds: L < 1");
  if (steps < 0) throw std::domain_error("extend_t_bounds: steps < 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  double u = t_L;
  for (int k = L; k < L + steps; ++k) {
    u = (static_cast<double>(k) * u + 1.0 - d.value()) / static_cast<double>(k + 1);
    out.push_back(u);
  }
  return out;
}

namespace {

// 1 + log2(1 + 2^(-2d/(1-d))): shared by the two-bit forms so that the
// per-use bound is exactly half the block capacity
double two_bit_log_term(double d) {
  return 1.0 + std::log2(1.0 + std::exp2(-2.0 * d / (1.0 - d)));
}

}  // namespace

double two_bit_capacity(DeletionProb dp) {
  const double d = dp.value();
  if (d == 1.0) return 0.0;
  const double sq = (1.0 - d) * (1.0 - d);
  return sq * two_bit_log_term(d) + 2.0 * (d * (1.0 - d));
}

double two_bit_block_bound(DeletionProb dp) {
  const double d = dp.value();
  if (d == 1.0) return 0.0;
  const double sq = (1.0 - d) * (1.0 - d);
  return (0.5 * sq) * two_bit_log_term(d) + d * (1.0 - d);
}

double gamma_star(DeletionProb dp) {
  const double d = dp.value();
  if (d == 1.0) return 1.0;
  const double e = 2.0 * d / (1.0 - d);
  if (e >= 1024.0) return 1.0;  // 2^e overflows; the ratio is 1 to all bits
  const double a = std::exp2(e);
  return a / (1.0 + a);
}

TwoBitDistribution optimal_2bit_dist(DeletionProb dp) {
  const double d = dp.value();
  if (d == 1.0) return {0.5, 0.0, 0.0, 0.5};
  const double e = 2.0 * d / (1.0 - d);
  if (e >= 512.0) {
    const double b = std::exp2(-e);  // may underflow to 0
    const double p1 = 0.5 * b / (1.0 + b);
    const double p0 = 0.5 - p1;
    return {p0, p1, p1, p0};
  }
  const double a = std::exp2(e);
  const double p1 = 0.5 / (1.0 + a);
  const double p0 = a * p1;  // keeps the ratio p0/p1 = 2^e exact
  return {p0, p1, p1, p0};
}

double markov_mi_bound(DeletionProb dp, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::domain_error("markov_mi_bound: gamma outside (0,1]");
  }
  const double d = dp.value();
  if (d == 1.0) return 0.0;
  const double arg = d * (1.0 - gamma) / (1.0 + d * (1.0 - 2.0 * gamma));
  if (!(arg >= 0.0 && arg <= 1.0)) {
    throw std::domain_error("markov_mi_bound: entropy argument outside [0,1]");
  }
  return (1.0 - d) * (1.0 - binary_entropy(arg));
}

double linear_gamma(DeletionProb dp) { return (1.0 + dp.value()) / 2.0; }

double linear_gamma_bound(DeletionProb dp) {
  return markov_mi_bound(dp, linear_gamma(dp));
}

ReferenceBounds reference_bounds(DeletionProb dp) {
  const double d = dp.value();
  ReferenceBounds r{1.0 - d, std::nullopt, std::nullopt};
  if (d >= 0.65) r.rahmati_duman = 0.4143 * (1.0 - d);
  if (d < 0.5) r.one_minus_h = 1.0 - binary_entropy(d);
  return r;
}

double cascade_bsc_bec(double p, double e) {
  if (!(p >= 0.0 && p <= 1.0 && e >= 0.0 && e <= 1.0)) {
    throw std::domain_error("cascade_bsc_bec: probabilities outside [0,1]");
  }
  return (1.0 - e) * (1.0 - binary_entropy(p));
}

namespace {

// objective of the Markov-input lower bounds: the two variants share A, B
// and the output stay probability q and differ only in how A, B combine
struct LowerObjective {
  double d;
  bool geometric;  // combine as A^(1-q) B^q instead of (1-q)A + qB

  double operator()(double t, double g) const {
    const double q = 1.0 - (1.0 - g) / (1.0 + d * (1.0 - 2.0 * g));
    const double et = std::exp(-t);
    const double denom = 1.0 - g * et;
    const double a = (1.0 - g) * et / denom;
    const double b = (1.0 - g) * (1.0 - g) * et * et / denom + g * et;
    const double mix = geometric ? (1.0 - q) * std::log2(a) + q * std::log2(b)
                                 : std::log2((1.0 - q) * a + q * b);
    return -t * std::numbers::log2e - (1.0 - d) * mix;
  }
};

// golden-section maximization of f(x) on [lo, hi]
template <typename F>
double golden_max(const F& f, double lo, double hi, double* best_x) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(b)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  if (best_x != nullptr) *best_x = mid;
  return f(mid);
}

double supremum_lower_bound(DeletionProb dp, bool geometric) {
  const double d = dp.value();
  if (d == 1.0) return 0.0;
  const LowerObjective obj{d, geometric};

  // coarse grid: 64 log-spaced t in [1e-4, 10], gamma 0.01..0.99
  constexpr int nt = 64, ng = 99;
  std::vector<double> ts(nt);
  const double lt0 = std::log(1e-4), lt1 = std::log(10.0);
  for (int i = 0; i < nt; ++i) {
    ts[static_cast<std::size_t>(i)] = std::exp(lt0 + (lt1 - lt0) * i / (nt - 1));
  }
  double best = -std::numeric_limits<double>::infinity();
  int bi = 0, bj = 0;
  for (int i = 0; i < nt; ++i) {
    for (int j = 1; j <= ng; ++j) {
      const double v = obj(ts[static_cast<std::size_t>(i)], 0.01 * j);
      if (v > best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }

  // coordinate-wise golden-section refinement between grid neighbours
  double t = ts[static_cast<std::size_t>(bi)];
  double g = 0.01 * bj;
  double t_lo = ts[static_cast<std::size_t>(bi > 0 ? bi - 1 : 0)];
  double t_hi = ts[static_cast<std::size_t>(bi < nt - 1 ? bi + 1 : nt - 1)];
  double g_lo = 0.01 * (bj > 1 ? bj - 1 : 1);
  double g_hi = 0.01 * (bj < ng ? bj + 1 : ng);
  double prev = best;
  for (int pass = 0; pass < 64; ++pass) {
    best = golden_max([&](double x) { return obj(x, g); }, t_lo, t_hi, &t);
    best = golden_max([&](double x) { return obj(t, x); }, g_lo, g_hi, &g);
    const double half_t = 0.5 * (t_hi - t_lo);
    const double half_g = 0.5 * (g_hi - g_lo);
    t_lo = t - half_t > 1e-6 ? t - half_t : 1e-6;
    t_hi = t + half_t;
    g_lo = g - half_g > 1e-4 ? g - half_g : 1e-4;
    g_hi = g + half_g < 1.0 - 1e-4 ? g + half_g : 1.0 - 1e-4;
    if (std::abs(best - prev) <= 1e-7) break;
    prev = best;
  }
  return best > 0.0 ? best : 0.0;
}

}  // namespace

double dg_lower_bound(DeletionProb d) { return supremum_lower_bound(d, false); }
double dm_lower_bound(DeletionProb d) { return supremum_lower_bound(d, true); }

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::upper: return "upper";
    case CurveKind::lower: return "lower";
    case CurveKind::reference: return "reference";
  }
  return "?";
}

void write_curves_csv(std::ostream& out, std::span<const double> d_grid,
                      std::span<const CurveColumn> columns) {
  for (const auto& c : columns) {
    if (c.values.size() != d_grid.size()) {
      throw std::invalid_argument("write_curves_csv: column length mismatch");
    }
    out << "# " << c.name << ": kind=" << to_string(c.kind);
    if (!c.formula.empty()) out << "  " << c.formula;
    out << '\n';
  }
  out << "d";
  for (const auto& c : columns) out << ',' << c.name;
  out << '\n';
  for (std::size_t i = 0; i < d_grid.size(); ++i) {
    out << detail::format_sig(d_grid[i], 12);
    for (const auto& c : columns) {
      const double v = c.values[i];
      out << ',';
      if (std::isnan(v)) {
        out << "NA";
      } else {
        out << detail::format_sig(v, 12);
      }
    }
    out << '\n';
  }
}

}  // namespace bdc
