#ifndef BDC_BITSEQ_HPP
#define BDC_BITSEQ_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bdc/bitstring.hpp"

namespace bdc {

// Number of distinct index subsets of x whose induced subsequence equals y.
// 0 when |y| > |x| or y is not a subsequence of x. Exact 64-bit counting DP,
// O(|x|*|y|); throws std::overflow_error if a count would exceed 64 bits.
std::uint64_t subsequence_count(const BitString& x, const BitString& y);

// Probability that the deletion channel maps x to exactly y:
// count(y,x) * (1-d)^|y| * d^(|x|-|y|). Requires |y| <= |x|.
double deletion_output_prob(const BitString& x, const BitString& y, DeletionProb d);

// Probability that exactly k of n bits are deleted: C(n,k) d^k (1-d)^(n-k).
double deletion_count_prob(int n, int k, DeletionProb d);

// Pass x through the deletion channel: every bit independently deleted with
// probability d, survivors keep their order. Same (x, d, seed) -> same output.
BitString sample_deletion(const BitString& x, DeletionProb d, std::uint64_t seed);

// -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0. Requires p in [0,1].
double binary_entropy(double p);

// -sum p_i log2 p_i over a probability vector. Entries must be nonnegative
// and sum to 1 within 1e-12; throws std::domain_error otherwise.
double entropy(std::span<const double> dist);

// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial_u64(int n, int k);

// integer power by repeated squaring, deterministic across platforms
double ipow(double base, int exp);

namespace detail {
// entropy without the normalization check, for internal hot paths
double raw_entropy(std::span<const double> dist);
}

}  // namespace bdc

#endif
