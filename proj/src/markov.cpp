#include "bdc/markov.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bdc/bitseq.hpp"
#include "bdc/rng.hpp"

namespace bdc::markov {

MarkovParams::MarkovParams(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error("MarkovParams: gamma outside [0,1]");
  }
}

BitString generate(int n, MarkovParams params, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("generate: n < 1");
  Rng rng(seed);
  BitString out;
  int bit = rng.bernoulli(0.5) ? 1 : 0;
  out.push_back(bit);
  for (int i = 1; i < n; ++i) {
    if (!rng.bernoulli(params.gamma())) bit ^= 1;
    out.push_back(bit);
  }
  return out;
}

double output_q(MarkovParams params, DeletionProb dp) {
  const double g = params.gamma();
  const double d = dp.value();
  if (d == 0.0) return g;  // output process equals the input process
  if (g == 1.0 && d == 1.0) return 1.0;
  return 1.0 - (1.0 - g) / (1.0 + d * (1.0 - 2.0 * g));
}

double same_symbol_prob(int k, MarkovParams params) {
  if (k < 0) throw std::domain_error("same_symbol_prob: k < 0");
  return (1.0 + ipow(2.0 * params.gamma() - 1.0, k)) / 2.0;
}

namespace {

// sum_{k=0}^{n-1} r^k
double geom_sum(double r, int n) {
  if (r == 1.0) return static_cast<double>(n);
  return (1.0 - ipow(r, n)) / (1.0 - r);
}

}  // namespace

double first_bit_match_prob(MarkovParams params, DeletionProb dp, int n) {
  if (n < 0) throw std::domain_error("first_bit_match_prob: n < 0");
  const double g = params.gamma();
  const double d = dp.value();
  const double s = 2.0 * g - 1.0;
  return (1.0 - d) +
         (d * (1.0 - d) / 2.0) * (geom_sum(d, n) + s * geom_sum(d * s, n));
}

double first_bit_match_prob(MarkovParams params, DeletionProb dp) {
  const double g = params.gamma();
  const double d = dp.value();
  if (g == 1.0) return 1.0;
  return 1.0 - d * (1.0 - g) / (1.0 + d * (1.0 - 2.0 * g));
}

double first_bit_mi(MarkovParams params, DeletionProb dp) {
  return 1.0 - binary_entropy(1.0 - first_bit_match_prob(params, dp));
}

double output_match_prob(int lag, double q) {
  if (lag < 0) throw std::domain_error("output_match_prob: lag < 0");
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("output_match_prob: q outside [0,1]");
  }
  return (1.0 + ipow(1.0 - 2.0 * q, lag)) / 2.0;
}

QEstimate estimate_q(MarkovParams params, DeletionProb d, int n, int trials,
                     std::uint64_t seed) {
  if (n < 1000) throw std::domain_error("estimate_q: n < 1000");
  if (trials < 1) throw std::domain_error("estimate_q: trials < 1");

  std::vector<std::uint64_t> matches(static_cast<std::size_t>(trials), 0);
  std::vector<std::uint64_t> pairs(static_cast<std::size_t>(trials), 0);

#pragma omp parallel for schedule(static)
  for (long long t = 0; t < trials; ++t) {
    const BitString input =
        generate(n, params, derive_seed(seed, 2 * static_cast<std::uint64_t>(t)));
    const BitString output =
        sample_deletion(input, d, derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
    // drop the transient, then count adjacent equal pairs
    const std::size_t skip = output.size() < 100 ? output.size() : 100;
    std::uint64_t eq = 0, total = 0;
    for (std::size_t i = skip; i + 1 < output.size(); ++i) {
      eq += output[i] == output[i + 1] ? 1u : 0u;
      ++total;
    }
    matches[static_cast<std::size_t>(t)] = eq;
    pairs[static_cast<std::size_t>(t)] = total;
  }

  std::uint64_t eq_sum = 0, pair_sum = 0;
  for (int t = 0; t < trials; ++t) {
    eq_sum += matches[static_cast<std::size_t>(t)];
    pair_sum += pairs[static_cast<std::size_t>(t)];
  }
  if (pair_sum == 0) {
    throw std::runtime_error("estimate_q: no surviving output pairs");
  }
  // adjacent-pair indicators of a symmetric binary Markov chain are i.i.d.,
  // so the binomial standard error is exact
  const double est = static_cast<double>(eq_sum) / static_cast<double>(pair_sum);
  const double se = std::sqrt(est * (1.0 - est) / static_cast<double>(pair_sum));
  return {est, se, pair_sum};
}

}  // namespace bdc::markov
