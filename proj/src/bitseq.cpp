#include "bdc/bitseq.hpp"

#include <cmath>
#include <stdexcept>

#include "bdc/rng.hpp"

namespace bdc {

std::uint64_t subsequence_count(const BitString& x, const BitString& y) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (m > n) return 0;
  // ways[j] = occurrences of y[0..j) in the processed prefix of x
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t hi = m < i + 1 ? m : i + 1;
    for (std::size_t j = hi; j >= 1; --j) {
      if (y[j - 1] == x[i]) {
        if (__builtin_add_overflow(ways[j], ways[j - 1], &ways[j])) {
          throw std::overflow_error("subsequence_count: 64-bit overflow");
        }
      }
    }
  }
  return ways[m];
}

double ipow(double base, int exp) {
  double result = 1.0;
  double b = base;
  unsigned e = static_cast<unsigned>(exp);
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

double deletion_output_prob(const BitString& x, const BitString& y,
                            DeletionProb d) {
  if (y.size() > x.size()) {
    throw std::domain_error("deletion_output_prob: |y| > |x|");
  }
  const int n = static_cast<int>(x.size());
  const int m = static_cast<int>(y.size());
  const double count = static_cast<double>(subsequence_count(x, y));
  return count * ipow(1.0 - d.value(), m) * ipow(d.value(), n - m);
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    // c * (n-k+i) / i is always integral at this point
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (c > UINT64_MAX / num) {
      throw std::overflow_error("binomial_u64: 64-bit overflow");
    }
    c = c * num / static_cast<std::uint64_t>(i);
  }
  return c;
}

double deletion_count_prob(int n, int k, DeletionProb d) {
  if (n < 1 || k < 0 || k > n) {
    throw std::domain_error("deletion_count_prob: k outside [0,n]");
  }
  // interleave the binomial factors with d to keep intermediates bounded
  double result = ipow(1.0 - d.value(), n - k);
  for (int i = 1; i <= k; ++i) {
    result *= d.value() * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

BitString sample_deletion(const BitString& x, DeletionProb d,
                          std::uint64_t seed) {
  Rng rng(seed);
  BitString out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!rng.bernoulli(d.value())) out.push_back(x[i]);
  }
  return out;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binary_entropy: p outside [0,1]");
  }
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

namespace detail {
double raw_entropy(std::span<const double> dist) {
  double h = 0.0;
  for (double p : dist) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}
}  // namespace detail

double entropy(std::span<const double> dist) {
  double sum = 0.0;
  for (double p : dist) {
    if (p < 0.0) throw std::domain_error("entropy: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::domain_error("entropy: vector does not sum to 1");
  }
  return detail::raw_entropy(dist);
}

}  // namespace bdc
