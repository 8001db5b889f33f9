#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bdc/channel_matrix.hpp"
#include "bdc/rng.hpp"
#include "bdc/serial_ref.hpp"

using bdc::BitString;
using bdc::ChannelMatrix;
using bdc::DeletionProb;

TEST_CASE("channel matrix constructor validates") {
  const auto labels1 = bdc::all_bitstrings(1);
  CHECK_NOTHROW(ChannelMatrix(labels1, labels1, {0.5, 0.5, 0.1, 0.9}));
  CHECK_THROWS_AS(ChannelMatrix(labels1, labels1, {0.6, 0.6, 0.1, 0.9}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChannelMatrix(labels1, labels1, {1.5, -0.5, 0.1, 0.9}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ChannelMatrix(labels1, labels1, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("one-bit full matrix: erasure-like rows") {
  for (double dv : {0.0, 0.3, 1.0}) {
    const auto m = bdc::build_fi_matrix(1, DeletionProb(dv));
    REQUIRE(m.num_inputs() == 2);
    REQUIRE(m.num_outputs() == 3);
    CHECK(m.output_labels()[0].to_string() == "0");
    CHECK(m.output_labels()[1].to_string() == "1");
    CHECK(m.output_labels()[2].to_string() == "");
    CHECK(m(0, 0) == 1.0 - dv);
    CHECK(m(0, 1) == 0.0);
    CHECK(m(0, 2) == dv);
    CHECK(m(1, 0) == 0.0);
    CHECK(m(1, 1) == 1.0 - dv);
    CHECK(m(1, 2) == dv);
  }
}

TEST_CASE("two-bit full matrix: block structure") {
  const double d = 0.3;
  const auto m = bdc::build_fi_matrix(2, DeletionProb(d));
  REQUIRE(m.num_inputs() == 4);
  REQUIRE(m.num_outputs() == 7);  // 00 01 10 11 0 1 null
  const double keep2 = (1 - d) * (1 - d);
  const double mix = d * (1 - d);
  // row 00
  CHECK(m(0, 0) == keep2);
  CHECK(m(0, 1) == 0.0);
  CHECK(m(0, 4) == 2 * d * (1 - d));
  CHECK(m(0, 5) == 0.0);
  CHECK(m(0, 6) == d * d);
  // row 01: identity block entry plus both one-bit outputs
  CHECK(m(1, 1) == keep2);
  CHECK(m(1, 4) == mix);
  CHECK(m(1, 5) == mix);
  CHECK(m(1, 6) == d * d);
  // row 11 mirrors row 00
  CHECK(m(3, 3) == keep2);
  CHECK(m(3, 4) == 0.0);
  CHECK(m(3, 5) == 2 * d * (1 - d));
}

TEST_CASE("full matrix at d=0 is the identity on the top block") {
  const auto m = bdc::build_fi_matrix(3, DeletionProb(0.0));
  for (std::size_t i = 0; i < m.num_inputs(); ++i) {
    for (std::size_t j = 0; j < m.num_outputs(); ++j) {
      CHECK(m(i, j) == (i == j ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("conditioned matrix basics") {
  // L = R: identity
  const auto id = bdc::build_fifo_matrix(3, 3);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) CHECK(id(i, j) == (i == j ? 1.0 : 0.0));
  }
  // R = 0: single all-ones column
  const auto null_out = bdc::build_fifo_matrix(3, 0);
  REQUIRE(null_out.num_outputs() == 1);
  for (std::size_t i = 0; i < 8; ++i) CHECK(null_out(i, 0) == 1.0);
  // L=2, R=1: mixed row for input 01
  const auto m21 = bdc::build_fifo_matrix(2, 1);
  CHECK(m21(0, 0) == 1.0);
  CHECK(m21(1, 0) == 0.5);
  CHECK(m21(1, 1) == 0.5);
  CHECK(m21(3, 1) == 1.0);
}

TEST_CASE("builder domain errors") {
  CHECK_THROWS_AS(bdc::build_fifo_matrix(3, 4), std::domain_error);
  CHECK_THROWS_AS(bdc::build_fifo_matrix(3, -1), std::domain_error);
  CHECK_THROWS_AS(bdc::build_fifo_matrix(13, 2), std::domain_error);
  CHECK_THROWS_AS(bdc::build_fi_matrix(12, DeletionProb(0.5)), std::domain_error);
  CHECK_NOTHROW(bdc::build_fifo_matrix(13, 2, 13));
}

TEST_CASE("canonical output order is length-descending then lexicographic") {
  const auto m = bdc::build_fi_matrix(2, DeletionProb(0.5));
  const auto& labels = m.output_labels();
  REQUIRE(labels.size() == 7);
  const char* expected[] = {"00", "01", "10", "11", "0", "1", ""};
  for (std::size_t i = 0; i < 7; ++i) CHECK(labels[i].to_string() == expected[i]);
}

TEST_CASE("rows are stochastic for both builders") {
  for (int L = 1; L <= 7; ++L) {
    for (int R = 0; R <= L; ++R) {
      const auto m = bdc::build_fifo_matrix(L, R);
      for (std::size_t i = 0; i < m.num_inputs(); ++i) {
        double sum = 0.0;
        for (double v : m.row(i)) sum += v;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
      }
    }
    const auto m = bdc::build_fi_matrix(L, DeletionProb(0.37));
    for (std::size_t i = 0; i < m.num_inputs(); ++i) {
      double sum = 0.0;
      for (double v : m.row(i)) sum += v;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("length-R block of the full matrix is the scaled conditioned matrix") {
  const int L = 5;
  for (double dv : {0.25, 0.7}) {
    const DeletionProb d(dv);
    const auto fi = bdc::build_fi_matrix(L, d);
    for (int R = L; R >= 0; --R) {
      const auto fifo = bdc::build_fifo_matrix(L, R);
      const double scale = bdc::deletion_count_prob(L, L - R, d);
      const std::size_t offset = (std::size_t{2} << L) - (std::size_t{2} << R);
      for (std::size_t i = 0; i < fi.num_inputs(); ++i) {
        for (std::size_t y = 0; y < (std::size_t{1} << R); ++y) {
          CHECK(std::abs(fi(i, offset + y) - scale * fifo(i, y)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("complementing input and output leaves entries unchanged") {
  const auto m = bdc::build_fi_matrix(5, DeletionProb(0.4));
  const std::size_t rows = m.num_inputs();
  for (std::size_t x = 0; x < rows; ++x) {
    for (int r = 5; r >= 0; --r) {
      const std::size_t offset = (std::size_t{2} << 5) - (std::size_t{2} << r);
      const std::size_t block = std::size_t{1} << r;
      for (std::size_t y = 0; y < block; ++y) {
        CHECK(m(x, offset + y) == m(rows - 1 - x, offset + (block - 1 - y)));
      }
    }
  }
}

TEST_CASE("row-sweep counts agree with the per-pair counting DP") {
  bdc::Rng rng(41);
  for (int n = 1; n <= 12; ++n) {
    BitString x;
    for (int i = 0; i < n; ++i) x.push_back(rng.bernoulli(0.5) ? 1 : 0);
    const auto counts = bdc::detail::subsequence_counts_all(x);
    for (int r = 0; r <= n; ++r) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
        CHECK(counts[static_cast<std::size_t>(r)][v] ==
              bdc::subsequence_count(x, BitString::from_bits(v, r)));
      }
    }
  }
}

TEST_CASE("parallel builders match the serial reference") {
  // conditioned matrix: identical arithmetic, exact match
  for (int L = 1; L <= 6; ++L) {
    for (int R = 0; R <= L; ++R) {
      const auto fast = bdc::build_fifo_matrix(L, R);
      const auto ref = bdc::serial_ref::build_fifo_matrix(L, R);
      for (std::size_t i = 0; i < fast.num_inputs(); ++i) {
        for (std::size_t j = 0; j < fast.num_outputs(); ++j) {
          CHECK(fast(i, j) == ref(i, j));
        }
      }
    }
  }
  // full matrix: association differs by one rounding
  const auto fast = bdc::build_fi_matrix(6, DeletionProb(0.45));
  const auto ref = bdc::serial_ref::build_fi_matrix(6, DeletionProb(0.45));
  REQUIRE(fast.num_outputs() == ref.num_outputs());
  for (std::size_t i = 0; i < fast.num_inputs(); ++i) {
    for (std::size_t j = 0; j < fast.num_outputs(); ++j) {
      CHECK(std::abs(fast(i, j) - ref(i, j)) <= 1e-15);
    }
  }
}

TEST_CASE("matrix CSV export") {
  std::ostringstream out;
  bdc::write_matrix_csv(out, bdc::build_fifo_matrix(2, 1));
  CHECK(out.str() == "input,0,1\n00,1,0\n01,0.5,0.5\n10,0.5,0.5\n11,0,1\n");

  std::ostringstream fi_out;
  bdc::write_matrix_csv(fi_out, bdc::build_fi_matrix(1, DeletionProb(0.5)));
  CHECK(fi_out.str() == "input,0,1,\n0,0.5,0,0.5\n1,0,0.5,0.5\n");
}
