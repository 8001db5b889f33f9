#ifndef BDC_MARKOV_HPP
#define BDC_MARKOV_HPP

#include <cstdint>

#include "bdc/bitstring.hpp"

namespace bdc::markov {

// First-order Markov source parameter: probability that a bit repeats its
// predecessor. Validated to [0,1].
class MarkovParams {
 public:
  explicit MarkovParams(double gamma);
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

// n-bit realization: first bit uniform, each later bit equals its
// predecessor with probability gamma. Deterministic given seed.
BitString generate(int n, MarkovParams params, std::uint64_t seed);

// Stay probability of the deletion-channel output process:
// q = 1 - (1-gamma) / (1 + d(1-2gamma)); 1 in the degenerate
// gamma = d = 1 corner.
double output_q(MarkovParams params, DeletionProb d);

// k-step same-symbol probability of the source chain: (1 + (2g-1)^k) / 2.
double same_symbol_prob(int k, MarkovParams params);

// Probability that the first received bit equals the first sent bit,
// truncated after n look-ahead terms of the geometric series.
double first_bit_match_prob(MarkovParams params, DeletionProb d, int n);

// Its n -> infinity limit: 1 - d(1-gamma) / (1 + d(1-2gamma)).
double first_bit_match_prob(MarkovParams params, DeletionProb d);

// Mutual information between first sent and first received bit under the
// bit-flip channel view: 1 - H(1 - first_bit_match_prob).
double first_bit_mi(MarkovParams params, DeletionProb d);

// Same-symbol probability of the output chain at a given lag:
// (1 + (1-2q)^lag) / 2.
double output_match_prob(int lag, double q);

struct QEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
  std::uint64_t pair_count = 0;
};

// Monte Carlo estimate of the output stay probability: Markov inputs of
// length n pass through the deletion channel; adjacent equal pairs are
// counted per trial after discarding the first 100 output symbols.
// Trial t uses subseeds derive_seed(seed, 2t) for the source and
// derive_seed(seed, 2t+1) for the channel. Requires n >= 1000; throws
// std::runtime_error when no output pairs survive.
QEstimate estimate_q(MarkovParams params, DeletionProb d, int n, int trials,
                     std::uint64_t seed);

}  // namespace bdc::markov

#endif
