#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "bdc/bitseq.hpp"
#include "bdc/rng.hpp"

using bdc::BitString;
using bdc::DeletionProb;

namespace {
BitString bs(const char* text) { return BitString::from_string(text); }

BitString random_bits(bdc::Rng& rng, int n) {
  BitString x;
  for (int i = 0; i < n; ++i) x.push_back(rng.bernoulli(0.5) ? 1 : 0);
  return x;
}
}  // namespace

TEST_CASE("subsequence counting matches the worked examples") {
  CHECK(bdc::subsequence_count(bs("10101010"), bs("10011")) == 1);
  CHECK(bdc::subsequence_count(bs("10101010"), bs("10101")) == 6);
}

TEST_CASE("subsequence counting edge cases") {
  CHECK(bdc::subsequence_count(bs("10101010"), bs("")) == 1);
  CHECK(bdc::subsequence_count(bs(""), bs("")) == 1);
  CHECK(bdc::subsequence_count(bs("0110"), bs("0110")) == 1);
  CHECK(bdc::subsequence_count(bs("01"), bs("011")) == 0);
  CHECK(bdc::subsequence_count(bs("0000"), bs("1")) == 0);
  CHECK(bdc::subsequence_count(bs("0000"), bs("00")) == 6);
}

TEST_CASE("subsequence counts over a fixed length sum to a binomial") {
  bdc::Rng rng(7);
  for (int n = 1; n <= 10; ++n) {
    const BitString x = random_bits(rng, n);
    for (int R = 0; R <= n; ++R) {
      std::uint64_t sum = 0;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << R); ++v) {
        sum += bdc::subsequence_count(x, BitString::from_bits(v, R));
      }
      CHECK(sum == bdc::binomial_u64(n, R));
    }
  }
}

TEST_CASE("deletion output probability") {
  const DeletionProb half(0.5);
  CHECK(bdc::deletion_output_prob(bs("10101010"), bs("10011"), half) ==
        doctest::Approx(0.00390625).epsilon(1e-14));
  // identity event: no deletions
  for (double dv : {0.0, 0.3, 0.9}) {
    const BitString x = bs("110100");
    CHECK(bdc::deletion_output_prob(x, x, DeletionProb(dv)) ==
          doctest::Approx(bdc::ipow(1.0 - dv, 6)).epsilon(1e-14));
  }
  // one-bit input, everything deleted
  CHECK(bdc::deletion_output_prob(bs("0"), bs(""), DeletionProb(0.37)) ==
        doctest::Approx(0.37).epsilon(1e-15));
  CHECK_THROWS_AS(bdc::deletion_output_prob(bs("0"), bs("00"), half),
                  std::domain_error);
}

TEST_CASE("deletion channel normalizes exactly") {
  bdc::Rng rng(11);
  for (int n : {1, 4, 8, 10}) {
    const BitString x = random_bits(rng, n);
    for (double dv : {0.2, 0.5, 0.8}) {
      const DeletionProb d(dv);
      double total = 0.0;
      for (int R = 0; R <= n; ++R) {
        double by_length = 0.0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << R); ++v) {
          by_length += bdc::deletion_output_prob(x, BitString::from_bits(v, R), d);
        }
        CHECK(by_length ==
              doctest::Approx(bdc::deletion_count_prob(n, n - R, d)).epsilon(1e-12));
        total += by_length;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("deletion count probability") {
  CHECK(bdc::deletion_count_prob(1, 1, DeletionProb(0.3)) == doctest::Approx(0.3));
  const double d = 0.3;
  CHECK(bdc::deletion_count_prob(2, 1, DeletionProb(d)) ==
        doctest::Approx(2 * d * (1 - d)).epsilon(1e-15));
  CHECK(bdc::deletion_count_prob(9, 0, DeletionProb(0.0)) == 1.0);
  CHECK_THROWS_AS(bdc::deletion_count_prob(3, 4, DeletionProb(0.5)), std::domain_error);
  CHECK_THROWS_AS(bdc::deletion_count_prob(3, -1, DeletionProb(0.5)), std::domain_error);
  for (int n : {5, 12}) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += bdc::deletion_count_prob(n, k, DeletionProb(0.41));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(bdc::binomial_u64(0, 0) == 1);
  CHECK(bdc::binomial_u64(17, 8) == 24310);
  CHECK(bdc::binomial_u64(5, 6) == 0);
  CHECK(bdc::binomial_u64(52, 26) == 495918532948104ull);
  CHECK_THROWS_AS(bdc::binomial_u64(100, 50), std::overflow_error);
}

TEST_CASE("deletion sampler") {
  bdc::Rng rng(13);
  const BitString x = random_bits(rng, 64);
  CHECK(bdc::sample_deletion(x, DeletionProb(0.0), 5) == x);
  CHECK(bdc::sample_deletion(x, DeletionProb(1.0), 5).empty());
  CHECK(bdc::sample_deletion(x, DeletionProb(0.4), 5) ==
        bdc::sample_deletion(x, DeletionProb(0.4), 5));

  // survivors keep their order: deleting from 0101... yields a subsequence
  const BitString y = bdc::sample_deletion(x, DeletionProb(0.5), 17);
  CHECK(bdc::subsequence_count(x, y) >= 1);
}

TEST_CASE("deletion sampler mean output length") {
  // binomial mean n(1-d), standard error sqrt(n d (1-d) / N)
  const int n = 64, N = 100000;
  const double d = 0.3;
  bdc::Rng rng(21);
  const BitString x = random_bits(rng, n);
  double total = 0.0;
  for (int t = 0; t < N; ++t) {
    total += static_cast<double>(
        bdc::sample_deletion(x, DeletionProb(d), bdc::derive_seed(555, t)).size());
  }
  const double mean = total / N;
  const double se = std::sqrt(n * d * (1 - d) / N);
  CHECK(std::abs(mean - n * (1 - d)) <= 3 * se);
}

TEST_CASE("binary entropy") {
  CHECK(bdc::binary_entropy(0.0) == 0.0);
  CHECK(bdc::binary_entropy(1.0) == 0.0);
  CHECK(bdc::binary_entropy(0.5) == 1.0);
  CHECK(bdc::binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  CHECK_THROWS_AS(bdc::binary_entropy(-0.01), std::domain_error);
  CHECK_THROWS_AS(bdc::binary_entropy(1.01), std::domain_error);
}

TEST_CASE("entropy of a probability vector") {
  const double one_hot[] = {1.0, 0.0, 0.0};
  CHECK(bdc::entropy(one_hot) == 0.0);
  const double uniform8[] = {0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125};
  CHECK(bdc::entropy(uniform8) == doctest::Approx(3.0).epsilon(1e-15));
  const double mixed[] = {0.5, 0.25, 0.25};
  CHECK(bdc::entropy(mixed) == doctest::Approx(1.5).epsilon(1e-15));
  const double bad_sum[] = {0.5, 0.25};
  CHECK_THROWS_AS(bdc::entropy(bad_sum), std::domain_error);
  const double negative[] = {1.5, -0.5};
  CHECK_THROWS_AS(bdc::entropy(negative), std::domain_error);
}

TEST_CASE("entropy identity over random exponents") {
  bdc::Rng rng(31);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double f = -20.0 + 40.0 * rng.next_double();
    const double p = 1.0 / (1.0 + std::exp2(f));
    const double lhs = bdc::binary_entropy(p) - f * p;
    const double rhs = std::log2(1.0 + std::exp2(-f));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst <= 1e-10);
}
