#include "bdc/verify.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include "bdc/baa.hpp"
#include "bdc/bitseq.hpp"
#include "bdc/channel_matrix.hpp"
#include "bdc/markov.hpp"
#include "bdc/rng.hpp"
#include "bdc/serial_ref.hpp"

namespace bdc::verify {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

CheckResult pass(std::string name, std::string detail = "") {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> g;
  const int count = static_cast<int>(std::llround((hi - lo) / step));
  for (int i = 0; i <= count; ++i) g.push_back(lo + step * i);
  return g;
}

std::vector<BitString> sample_inputs(std::uint64_t seed) {
  std::vector<BitString> xs;
  xs.push_back(BitString::from_string("0"));
  xs.push_back(BitString::from_string("10"));
  xs.push_back(BitString::from_string("0110"));
  Rng rng(seed);
  for (int n = 5; n <= 10; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      BitString x;
      for (int i = 0; i < n; ++i) x.push_back(rng.bernoulli(0.5) ? 1 : 0);
      xs.push_back(x);
    }
  }
  return xs;
}

}  // namespace

BoundTables compute_bound_tables(const VerifyOptions& opt) {
  BoundTables t;
  t.L_max = opt.L_max;
  t.d_grid = grid(0.1, 0.9, 0.1);

  std::vector<std::pair<int, int>> f_jobs;
  for (int L = 1; L <= opt.L_max; ++L) {
    for (int R = 0; R <= L; ++R) f_jobs.emplace_back(L, R);
  }
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(f_jobs.size()); ++k) {
    const auto [L, R] = f_jobs[static_cast<std::size_t>(k)];
    f_value(L, R, opt.f_tol);
  }
  for (const auto& [L, R] : f_jobs) t.f[{L, R}] = f_value(L, R, opt.f_tol);

  std::vector<std::pair<int, int>> c_jobs;
  for (int L = 1; L <= opt.L_max; ++L) {
    for (int di = 0; di < static_cast<int>(t.d_grid.size()); ++di) {
      c_jobs.emplace_back(L, di);
    }
  }
  std::vector<double> c_vals(c_jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < static_cast<long long>(c_jobs.size()); ++k) {
    const auto [L, di] = c_jobs[static_cast<std::size_t>(k)];
    c_vals[static_cast<std::size_t>(k)] = fi_capacity(
        L, DeletionProb(t.d_grid[static_cast<std::size_t>(di)]), opt.tol);
  }
  for (std::size_t k = 0; k < c_jobs.size(); ++k) t.fi_cap[c_jobs[k]] = c_vals[k];
  return t;
}

CheckResult check_count_subset_sum(const VerifyOptions& opt) {
  const char* name = "count-subset-sum";
  for (const auto& x : sample_inputs(derive_seed(opt.seed, 1))) {
    const int n = static_cast<int>(x.size());
    for (int R = 0; R <= n; ++R) {
      std::uint64_t sum = 0;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << R); ++v) {
        sum += subsequence_count(x, BitString::from_bits(v, R));
      }
      if (sum != binomial_u64(n, R)) {
        return fail(name, "x=" + x.to_string() + fmt(" R=%.0f", R));
      }
    }
  }
  return pass(name);
}

CheckResult check_channel_normalization(const VerifyOptions& opt) {
  const char* name = "channel-normalization";
  for (const auto& x : sample_inputs(derive_seed(opt.seed, 2))) {
    const int n = static_cast<int>(x.size());
    for (double dv : {0.2, 0.5, 0.8}) {
      const DeletionProb d(dv);
      double sum = 0.0;
      for (int R = 0; R <= n; ++R) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << R); ++v) {
          sum += deletion_output_prob(x, BitString::from_bits(v, R), d);
        }
      }
      if (std::abs(sum - 1.0) > 1e-12) {
        return fail(name, "x=" + x.to_string() + fmt(" d=%.1f sum=%.17g", dv, sum));
      }
    }
  }
  return pass(name);
}

CheckResult check_length_marginal(const VerifyOptions& opt) {
  const char* name = "length-marginal";
  for (const auto& x : sample_inputs(derive_seed(opt.seed, 3))) {
    const int n = static_cast<int>(x.size());
    for (double dv : {0.2, 0.5, 0.8}) {
      const DeletionProb d(dv);
      for (int R = 0; R <= n; ++R) {
        double sum = 0.0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << R); ++v) {
          sum += deletion_output_prob(x, BitString::from_bits(v, R), d);
        }
        const double expect = deletion_count_prob(n, n - R, d);
        if (std::abs(sum - expect) > 1e-12) {
          return fail(name, "x=" + x.to_string() +
                                fmt(" d=%.1f diff=%.3g", dv, sum - expect));
        }
      }
    }
  }
  return pass(name);
}

CheckResult check_entropy_identity(const VerifyOptions& opt) {
  const char* name = "entropy-identity";
  Rng rng(derive_seed(opt.seed, 4));
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double f = -20.0 + 40.0 * rng.next_double();
    const double p = 1.0 / (1.0 + std::exp2(f));
    const double lhs = binary_entropy(p) - f * p;
    const double rhs = std::log2(1.0 + std::exp2(-f));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  if (worst > 1e-10) return fail(name, fmt("max deviation %.3g", worst));
  return pass(name, fmt("max deviation %.3g", worst));
}

CheckResult check_sampler_determinism(const VerifyOptions& opt) {
  const char* name = "sampler-determinism";
  Rng rng(derive_seed(opt.seed, 5));
  BitString x;
  for (int i = 0; i < 200; ++i) x.push_back(rng.bernoulli(0.5) ? 1 : 0);
  for (double dv : {0.0, 0.3, 0.7, 1.0}) {
    const DeletionProb d(dv);
    for (std::uint64_t s : {1ull, 42ull, 9999ull}) {
      if (!(sample_deletion(x, d, s) == sample_deletion(x, d, s))) {
        return fail(name, fmt("d=%.1f", dv));
      }
    }
  }
  if (!(sample_deletion(x, DeletionProb(0.0), 7) == x)) return fail(name, "d=0");
  if (!sample_deletion(x, DeletionProb(1.0), 7).empty()) return fail(name, "d=1");
  return pass(name);
}

CheckResult check_row_stochastic(const VerifyOptions& opt) {
  const char* name = "row-stochastic";
  const int top = std::min(opt.L_max, 8);
  auto inspect = [&](const ChannelMatrix& m) -> double {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.num_inputs(); ++i) {
      double sum = 0.0;
      for (double v : m.row(i)) sum += v;
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  };
  double worst = 0.0;
  for (int L = 1; L <= top; ++L) {
    for (int R = 0; R <= L; ++R) worst = std::max(worst, inspect(build_fifo_matrix(L, R)));
    for (double dv : {0.3, 0.7}) {
      worst = std::max(worst, inspect(build_fi_matrix(L, DeletionProb(dv))));
    }
  }
  if (worst > 1e-12) return fail(name, fmt("max row-sum deviation %.3g", worst));
  return pass(name, fmt("max row-sum deviation %.3g", worst));
}

CheckResult check_block_scaling(const VerifyOptions& opt) {
  const char* name = "fi-fifo-block-scaling";
  const int top = std::min(opt.L_max, 6);
  for (int L = 1; L <= top; ++L) {
    for (double dv : {0.3, 0.7}) {
      const DeletionProb d(dv);
      const ChannelMatrix fi = build_fi_matrix(L, d);
      for (int R = L; R >= 0; --R) {
        const ChannelMatrix fifo = build_fifo_matrix(L, R);
        const double scale = deletion_count_prob(L, L - R, d);
        const std::size_t offset = (std::size_t{2} << L) - (std::size_t{2} << R);
        for (std::size_t i = 0; i < fi.num_inputs(); ++i) {
          for (std::size_t y = 0; y < (std::size_t{1} << R); ++y) {
            const double diff = fi(i, offset + y) - scale * fifo(i, y);
            if (std::abs(diff) > 1e-12) {
              return fail(name, fmt("L=%.0f R=%.0f diff=%.3g", L, R, diff));
            }
          }
        }
      }
    }
  }
  return pass(name);
}

CheckResult check_complement_symmetry(const VerifyOptions& opt) {
  const char* name = "complement-symmetry";
  const int top = std::min(opt.L_max, 6);
  for (int L = 1; L <= top; ++L) {
    const ChannelMatrix fi = build_fi_matrix(L, DeletionProb(0.35));
    const std::size_t rows = fi.num_inputs();
    for (std::size_t x = 0; x < rows; ++x) {
      const std::size_t xc = rows - 1 - x;
      for (int r = L; r >= 0; --r) {
        const std::size_t offset = (std::size_t{2} << L) - (std::size_t{2} << r);
        const std::size_t block = std::size_t{1} << r;
        for (std::size_t y = 0; y < block; ++y) {
          if (fi(x, offset + y) != fi(xc, offset + (block - 1 - y))) {
            return fail(name, fmt("L=%.0f x=%.0f", L, x));
          }
        }
      }
    }
  }
  return pass(name);
}

CheckResult check_fifo_exact_rational(const VerifyOptions& opt) {
  const char* name = "fifo-exact-rational";
  const int top = std::min(opt.L_max, 6);
  for (int L = 1; L <= top; ++L) {
    for (int R = 0; R <= L; ++R) {
      const ChannelMatrix fast = build_fifo_matrix(L, R);
      const ChannelMatrix ref = serial_ref::build_fifo_matrix(L, R);
      for (std::size_t i = 0; i < fast.num_inputs(); ++i) {
        for (std::size_t j = 0; j < fast.num_outputs(); ++j) {
          if (fast(i, j) != ref(i, j)) {
            return fail(name, fmt("L=%.0f R=%.0f entry (%.0f,...)", L, R, i));
          }
        }
      }
    }
  }
  return pass(name);
}

CheckResult check_baa_bracket_monotone(const VerifyOptions& opt) {
  const char* name = "baa-bracket-monotone";
  const std::vector<ChannelMatrix> channels = {
      build_fi_matrix(2, DeletionProb(0.3)), build_fi_matrix(4, DeletionProb(0.5)),
      build_fifo_matrix(3, 2), build_fifo_matrix(4, 2)};
  for (const auto& ch : channels) {
    const BaaResult res = blahut_arimoto(ch, opt.tol, 200000);
    for (std::size_t k = 1; k < res.lower_history.size(); ++k) {
      if (res.lower_history[k] < res.lower_history[k - 1] - 1e-12) {
        return fail(name, fmt("drop at iteration %.0f", static_cast<double>(k)));
      }
    }
  }
  return pass(name);
}

CheckResult check_baa_init_independence(const VerifyOptions& opt) {
  const char* name = "baa-init-independence";
  Rng rng(derive_seed(opt.seed, 6));
  const std::vector<ChannelMatrix> channels = {
      build_fi_matrix(2, DeletionProb(0.3)), build_fi_matrix(2, DeletionProb(0.7)),
      build_fifo_matrix(3, 2)};
  for (const auto& ch : channels) {
    const double base = blahut_arimoto(ch, opt.tol, 200000).capacity;
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> w(ch.num_inputs());
      double sum = 0.0;
      for (auto& v : w) {
        v = 0.1 + rng.next_double();
        sum += v;
      }
      for (auto& v : w) v /= sum;
      const InputDistribution init(w);
      const double cap = blahut_arimoto(ch, opt.tol, 200000, &init).capacity;
      if (std::abs(cap - base) > 10.0 * opt.tol) {
        return fail(name, fmt("spread %.3g", cap - base));
      }
    }
  }
  return pass(name);
}

CheckResult check_f_anchors(const BoundTables& t) {
  const char* name = "f-anchors-and-range";
  for (const auto& [key, f] : t.f) {
    const auto [L, R] = key;
    if (R == 0 && f != 0.0) return fail(name, fmt("f(%.0f,0)=%.3g", L, f));
    if (R == 1 && std::abs(f - 1.0) > 1e-8) {
      return fail(name, fmt("f(%.0f,1)=%.12g", L, f));
    }
    if (R == L && std::abs(f - L) > 1e-6) {
      return fail(name, fmt("f(%.0f,%.0f)=%.12g", L, R, f));
    }
    if (f < 0.0 || f > R + 1e-9) {
      return fail(name, fmt("f(%.0f,%.0f)=%.12g outside [0,R]", L, R, f));
    }
  }
  return pass(name);
}

CheckResult check_cl_below_weighted_f(const BoundTables& t) {
  const char* name = "fi-capacity-below-weighted-f";
  for (int L = 1; L <= t.L_max; ++L) {
    for (int di = 0; di < static_cast<int>(t.d_grid.size()); ++di) {
      const DeletionProb d(t.d_grid[static_cast<std::size_t>(di)]);
      double rhs = 0.0;
      for (int i = 0; i <= L; ++i) {
        rhs += deletion_count_prob(L, i, d) * t.f.at({L, L - i});
      }
      const double cl = t.fi_cap.at({L, di});
      if (cl > rhs + 1e-9) {
        return fail(name, fmt("L=%.0f d=%.1f C=%.12g", L, d.value(), cl) +
                              fmt(" rhs=%.12g", rhs));
      }
    }
  }
  return pass(name);
}

CheckResult check_f_recursion(const BoundTables& t) {
  const char* name = "f-recursion-inequality";
  for (int L = 1; L < t.L_max; ++L) {
    for (int i = 1; i <= L; ++i) {
      const double lhs = t.f.at({L + 1, L + 1 - i});
      const double w = static_cast<double>(i) / (L + 1);
      const double rhs = w * t.f.at({L, L - i + 1}) + (1.0 - w) * (1.0 + t.f.at({L, L - i}));
      if (lhs > rhs + 1e-9) {
        return fail(name, fmt("L=%.0f i=%.0f slack=%.3g", L, i, rhs - lhs));
      }
    }
  }
  return pass(name);
}

CheckResult check_t_nonincreasing(const BoundTables& t) {
  const char* name = "t-sequence-nonincreasing";
  for (double dv : t.d_grid) {
    const DeletionProb d(dv);
    for (int L = 1; L < t.L_max; ++L) {
      const double a = t_bound(L, d, t.f);
      const double b = t_bound(L + 1, d, t.f);
      if (b > a + 1e-9) {
        return fail(name, fmt("d=%.1f T_%.0f > T_%.0f", dv, L + 1, L));
      }
    }
  }
  return pass(name);
}

CheckResult check_t_recursion(const BoundTables& t) {
  const char* name = "t-recursion-inequality";
  for (double dv : t.d_grid) {
    const DeletionProb d(dv);
    for (int L = 1; L < t.L_max; ++L) {
      const double lhs = (L + 1) * t_bound(L + 1, d, t.f);
      const double rhs = L * t_bound(L, d, t.f) + 1.0 - dv;
      if (lhs > rhs + 1e-9) {
        return fail(name, fmt("L=%.0f d=%.1f slack=%.3g", L, dv, rhs - lhs));
      }
    }
  }
  return pass(name);
}

CheckResult check_two_bit_halving(const VerifyOptions&) {
  const char* name = "two-bit-bound-halving";
  for (double dv : grid(0.0, 1.0, 0.05)) {
    const DeletionProb d(dv);
    if (two_bit_block_bound(d) != two_bit_capacity(d) / 2.0) {
      return fail(name, fmt("d=%.2f", dv));
    }
  }
  return pass(name);
}

CheckResult check_two_bit_vs_baa(const VerifyOptions& opt) {
  const char* name = "two-bit-closed-form-vs-baa";
  double worst = 0.0;
  for (double dv : grid(0.05, 0.95, 0.05)) {
    const DeletionProb d(dv);
    const double baa = blahut_arimoto(build_fi_matrix(2, d), opt.tol, 1000000).capacity;
    worst = std::max(worst, std::abs(baa - two_bit_capacity(d)));
  }
  if (worst > 1e-6) return fail(name, fmt("max deviation %.3g", worst));
  return pass(name, fmt("max deviation %.3g", worst));
}

CheckResult check_optimal_2bit_ratio(const VerifyOptions&) {
  const char* name = "optimal-2bit-ratio";
  for (double dv : grid(0.0, 0.95, 0.05)) {
    const TwoBitDistribution p = optimal_2bit_dist(DeletionProb(dv));
    const double a = std::exp2(2.0 * dv / (1.0 - dv));
    if (p.p0 != a * p.p1) return fail(name, fmt("d=%.2f", dv));
  }
  return pass(name);
}

CheckResult check_mi_bound_below_erasure(const VerifyOptions&) {
  const char* name = "markov-mi-below-erasure";
  for (double g : grid(0.5, 1.0, 0.05)) {
    for (double dv : grid(0.0, 1.0, 0.05)) {
      if (markov_mi_bound(DeletionProb(dv), g) > 1.0 - dv) {
        return fail(name, fmt("gamma=%.2f d=%.2f", g, dv));
      }
    }
  }
  return pass(name);
}

CheckResult check_linear_bound_monotone(const VerifyOptions&) {
  const char* name = "linear-gamma-bound-monotone";
  double prev = linear_gamma_bound(DeletionProb(0.0));
  for (int i = 1; i <= 1000; ++i) {
    const double cur = linear_gamma_bound(DeletionProb(i * 1e-3));
    if (cur > prev + 1e-12) return fail(name, fmt("rise at d=%.3f", i * 1e-3));
    prev = cur;
  }
  return pass(name);
}

CheckResult check_bound_identities(const VerifyOptions&) {
  const char* name = "bound-identities";
  for (double dv : grid(0.0, 1.0, 0.05)) {
    const DeletionProb d(dv);
    const double direct =
        dv < 1.0 ? (1.0 - dv) * (1.0 - binary_entropy(dv / (2.0 * (1.0 + dv)))) : 0.0;
    if (std::abs(linear_gamma_bound(d) - direct) > 1e-12) {
      return fail(name, fmt("linear form d=%.2f", dv));
    }
    for (double g : {0.55, 0.75, 0.9, 0.99}) {
      const double bound = markov_mi_bound(d, g);
      if (dv < 1.0) {
        const double arg = dv * (1.0 - g) / (1.0 + dv * (1.0 - 2.0 * g));
        if (std::abs(bound - cascade_bsc_bec(arg, dv)) > 1e-12) {
          return fail(name, fmt("cascade d=%.2f gamma=%.2f", dv, g));
        }
      }
      const double via_mi =
          (1.0 - dv) * markov::first_bit_mi(markov::MarkovParams(g), d);
      if (std::abs(bound - via_mi) > 1e-12) {
        return fail(name, fmt("first-bit route d=%.2f gamma=%.2f", dv, g));
      }
    }
  }
  return pass(name);
}

CheckResult check_families_ordered(const BoundTables& t) {
  const char* name = "bound-families-ordered";
  for (std::size_t di = 0; di < t.d_grid.size(); ++di) {
    const double dv = t.d_grid[di];
    const DeletionProb d(dv);
    const double lower = std::max(dg_lower_bound(d), dm_lower_bound(d));
    double upper = 1.0 - dv;
    for (int L = 1; L <= t.L_max; ++L) upper = std::min(upper, t_bound(L, d, t.f));
    upper = std::min(upper, two_bit_block_bound(d));
    upper = std::min(upper, linear_gamma_bound(d));
    if (lower > upper + 1e-6) {
      return fail(name, fmt("d=%.1f lower=%.6g upper=%.6g", dv, lower, upper));
    }
  }
  return pass(name);
}

double brute_force_first_bit(int n, double gamma, double d) {
  const std::uint64_t size = std::uint64_t{1} << n;
  // mask bit k set = position k kept (position 0 is the first bit)
  std::vector<double> mask_weight(size);
  std::vector<int> first_kept(size, -1);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    const int kept = std::popcount(mask);
    mask_weight[mask] = ipow(1.0 - d, kept) * ipow(d, n - kept);
    if (mask != 0) first_kept[mask] = std::countr_zero(mask);
  }
  double total = 0.0;
  for (std::uint64_t x = 0; x < size; ++x) {
    double w = 0.5;
    for (int k = 1; k < n; ++k) {
      const int prev = static_cast<int>((x >> (n - k)) & 1);
      const int cur = static_cast<int>((x >> (n - 1 - k)) & 1);
      w *= prev == cur ? gamma : 1.0 - gamma;
    }
    const int first_bit = static_cast<int>((x >> (n - 1)) & 1);
    double partial = 0.0;
    for (std::uint64_t mask = 1; mask < size; ++mask) {
      const int pos = first_kept[mask];
      const int bit = static_cast<int>((x >> (n - 1 - pos)) & 1);
      if (bit == first_bit) partial += mask_weight[mask];
    }
    total += w * partial;
  }
  return total;
}

CheckResult check_first_bit_brute_force(const VerifyOptions&) {
  const char* name = "first-bit-brute-force";
  double worst = 0.0;
  for (int n = 1; n <= 12; ++n) {
    for (double g : {0.3, 0.5, 0.8}) {
      for (double dv : {0.2, 0.5}) {
        const double brute = brute_force_first_bit(n, g, dv);
        const double analytic = markov::first_bit_match_prob(
            markov::MarkovParams(g), DeletionProb(dv), n - 1);
        const double diff = std::abs(brute - analytic);
        worst = std::max(worst, diff);
        if (diff > 1e-10) {
          return fail(name, fmt("n=%.0f gamma=%.1f d=%.1f", n, g, dv) +
                                fmt(" diff=%.3g", diff));
        }
      }
    }
  }
  return pass(name, fmt("max deviation %.3g", worst));
}

CheckResult check_first_bit_tail(const VerifyOptions&) {
  const char* name = "first-bit-tail-bound";
  for (int n : {10, 20, 40}) {
    for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      for (double dv : grid(0.1, 0.9, 0.1)) {
        const markov::MarkovParams params(g);
        const DeletionProb d(dv);
        const double fin = markov::first_bit_match_prob(params, d, n);
        const double lim = markov::first_bit_match_prob(params, d);
        const double tail = 2.0 * ipow(dv, n) / (1.0 - dv);
        if (std::abs(fin - lim) > tail + 1e-15) {
          return fail(name, fmt("n=%.0f gamma=%.1f d=%.1f", n, g, dv));
        }
      }
    }
  }
  return pass(name);
}

CheckResult check_estimate_q(const VerifyOptions& opt) {
  const char* name = "estimate-q-vs-analytic";
  double worst_z = 0.0;
  int idx = 0;
  for (double g : grid(0.1, 0.9, 0.1)) {
    for (double dv : grid(0.1, 0.9, 0.1)) {
      const markov::MarkovParams params(g);
      const DeletionProb d(dv);
      const auto est = markov::estimate_q(params, d, opt.mc_n, opt.mc_trials,
                                          derive_seed(opt.seed, 7000 + idx));
      const double z = (est.estimate - markov::output_q(params, d)) / est.std_err;
      worst_z = std::max(worst_z, std::abs(z));
      if (std::abs(z) > 4.0) {
        return fail(name, fmt("gamma=%.1f d=%.1f z=%.2f", g, dv, z));
      }
      ++idx;
    }
  }
  return pass(name, fmt("max |z| = %.2f", worst_z));
}

CheckResult check_output_q_identity(const VerifyOptions&) {
  const char* name = "output-q-at-d0";
  for (int i = 0; i <= 100; ++i) {
    const double g = i * 0.01;
    if (markov::output_q(markov::MarkovParams(g), DeletionProb(0.0)) != g) {
      return fail(name, fmt("gamma=%.2f", g));
    }
  }
  return pass(name);
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  const BoundTables tables = compute_bound_tables(opt);
  std::vector<CheckResult> out;
  out.push_back(check_count_subset_sum(opt));
  out.push_back(check_channel_normalization(opt));
  out.push_back(check_length_marginal(opt));
  out.push_back(check_entropy_identity(opt));
  out.push_back(check_sampler_determinism(opt));
  out.push_back(check_row_stochastic(opt));
  out.push_back(check_block_scaling(opt));
  out.push_back(check_complement_symmetry(opt));
  out.push_back(check_fifo_exact_rational(opt));
  out.push_back(check_baa_bracket_monotone(opt));
  out.push_back(check_baa_init_independence(opt));
  out.push_back(check_f_anchors(tables));
  out.push_back(check_cl_below_weighted_f(tables));
  out.push_back(check_f_recursion(tables));
  out.push_back(check_t_nonincreasing(tables));
  out.push_back(check_t_recursion(tables));
  out.push_back(check_two_bit_halving(opt));
  out.push_back(check_two_bit_vs_baa(opt));
  out.push_back(check_optimal_2bit_ratio(opt));
  out.push_back(check_mi_bound_below_erasure(opt));
  out.push_back(check_linear_bound_monotone(opt));
  out.push_back(check_bound_identities(opt));
  out.push_back(check_families_ordered(tables));
  out.push_back(check_first_bit_brute_force(opt));
  out.push_back(check_first_bit_tail(opt));
  out.push_back(check_estimate_q(opt));
  out.push_back(check_output_q_identity(opt));
  return out;
}

}  // namespace bdc::verify
