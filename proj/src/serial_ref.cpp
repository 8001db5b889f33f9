#include "bdc/serial_ref.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bdc/bitseq.hpp"
#include "bdc/rng.hpp"

namespace bdc::serial_ref {

ChannelMatrix build_fifo_matrix(int L, int R, int cap) {
  if (L < 1 || R < 0 || R > L) {
    throw std::domain_error("build_fifo_matrix: need 0 <= R <= L");
  }
  if (L > cap) throw std::domain_error("build_fifo_matrix: L over cap");
  const auto inputs = all_bitstrings(L);
  const auto outputs = all_bitstrings(R);
  const double denom = static_cast<double>(binomial_u64(L, R));
  std::vector<double> entries;
  entries.reserve(inputs.size() * outputs.size());
  for (const auto& x : inputs) {
    for (const auto& y : outputs) {
      entries.push_back(static_cast<double>(subsequence_count(x, y)) / denom);
    }
  }
  return ChannelMatrix(inputs, outputs, std::move(entries));
}

ChannelMatrix build_fi_matrix(int L, DeletionProb d, int cap) {
  if (L < 1) throw std::domain_error("build_fi_matrix: L < 1");
  if (L > cap) throw std::domain_error("build_fi_matrix: L over cap");
  const auto inputs = all_bitstrings(L);
  std::vector<BitString> outputs;
  for (int r = L; r >= 0; --r) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
      outputs.push_back(BitString::from_bits(v, r));
    }
  }
  std::vector<double> entries;
  entries.reserve(inputs.size() * outputs.size());
  for (const auto& x : inputs) {
    for (const auto& y : outputs) {
      entries.push_back(deletion_output_prob(x, y, d));
    }
  }
  return ChannelMatrix(inputs, std::move(outputs), std::move(entries));
}

BaaResult blahut_arimoto(const ChannelMatrix& ch, double tol, int max_iter,
                         const InputDistribution* init) {
  if (!(tol > 0.0)) throw std::domain_error("blahut_arimoto: tol must be > 0");
  if (max_iter < 1) throw std::domain_error("blahut_arimoto: max_iter < 1");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = ch.num_inputs();
  const std::size_t m = ch.num_outputs();

  std::vector<double> p;
  if (init != nullptr) {
    if (init->size() != n) {
      throw std::invalid_argument("blahut_arimoto: init dimension mismatch");
    }
    p.assign(init->probs().begin(), init->probs().end());
  } else {
    p.assign(n, 1.0 / static_cast<double>(n));
  }

  std::vector<double> q(m), div(n);
  std::vector<double> history;
  double lower = 0.0, gap = kInf;
  bool converged = false;
  int iter = 0;

  while (iter < max_iter) {
    ++iter;
    for (std::size_t j = 0; j < m; ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += p[i] * ch(i, j);
      q[j] = acc;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = ch.row(i);
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        const double w = row[j];
        if (w > 0.0) {
          if (q[j] > 0.0) {
            acc += w * std::log2(w / q[j]);
          } else {
            acc = kInf;
            break;
          }
        }
      }
      div[i] = acc;
    }
    lower = 0.0;
    double upper = -kInf, shift = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] > 0.0) {
        lower += p[i] * div[i];
        if (div[i] > shift) shift = div[i];
      }
      if (div[i] > upper) upper = div[i];
    }
    history.push_back(lower);
    gap = upper - lower;
    if (gap <= tol) {
      converged = true;
      break;
    }
    if (iter == max_iter) break;
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = p[i] > 0.0 ? p[i] * std::exp2(div[i] - shift) : 0.0;
      z += p[i];
    }
    for (std::size_t i = 0; i < n; ++i) p[i] /= z;
  }

  BaaResult result;
  result.capacity = lower > 0.0 ? lower : 0.0;
  result.distribution = InputDistribution(std::move(p));
  result.iterations = iter;
  result.converged = converged;
  result.gap_bound = gap;
  result.lower_history = std::move(history);
  return result;
}

markov::QEstimate estimate_q(markov::MarkovParams params, DeletionProb d,
                             int n, int trials, std::uint64_t seed) {
  if (n < 1000) throw std::domain_error("estimate_q: n < 1000");
  if (trials < 1) throw std::domain_error("estimate_q: trials < 1");
  std::uint64_t eq_sum = 0, pair_sum = 0;
  for (int t = 0; t < trials; ++t) {
    const BitString input = markov::generate(
        n, params, derive_seed(seed, 2 * static_cast<std::uint64_t>(t)));
    const BitString output = sample_deletion(
        input, d, derive_seed(seed, 2 * static_cast<std::uint64_t>(t) + 1));
    const std::size_t skip = output.size() < 100 ? output.size() : 100;
    for (std::size_t i = skip; i + 1 < output.size(); ++i) {
      eq_sum += output[i] == output[i + 1] ? 1u : 0u;
      ++pair_sum;
    }
  }
  if (pair_sum == 0) {
    throw std::runtime_error("estimate_q: no surviving output pairs");
  }
  const double est = static_cast<double>(eq_sum) / static_cast<double>(pair_sum);
  const double se = std::sqrt(est * (1.0 - est) / static_cast<double>(pair_sum));
  return {est, se, pair_sum};
}

}  // namespace bdc::serial_ref
