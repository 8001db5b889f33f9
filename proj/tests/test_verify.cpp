#include "doctest.h"

#include <cmath>

#include "bdc/markov.hpp"
#include "bdc/verify.hpp"

using bdc::verify::BoundTables;
using bdc::verify::VerifyOptions;

namespace {

VerifyOptions quick_options() {
  VerifyOptions opt;
  opt.L_max = 3;
  opt.mc_n = 2000;  // the checks themselves use larger runs; keep tests fast
  opt.mc_trials = 5;
  return opt;
}

}  // namespace

TEST_CASE("bound tables carry every entry the checks need") {
  const auto opt = quick_options();
  const BoundTables t = bdc::verify::compute_bound_tables(opt);
  CHECK(t.L_max == 3);
  CHECK(t.d_grid.size() == 9);
  for (int L = 1; L <= 3; ++L) {
    for (int R = 0; R <= L; ++R) CHECK(t.f.count({L, R}) == 1);
    for (int di = 0; di < 9; ++di) CHECK(t.fi_cap.count({L, di}) == 1);
  }
}

TEST_CASE("table-driven checks pass on honest tables") {
  const auto opt = quick_options();
  const BoundTables t = bdc::verify::compute_bound_tables(opt);
  CHECK(bdc::verify::check_f_anchors(t).pass);
  CHECK(bdc::verify::check_cl_below_weighted_f(t).pass);
  CHECK(bdc::verify::check_f_recursion(t).pass);
  CHECK(bdc::verify::check_t_nonincreasing(t).pass);
  CHECK(bdc::verify::check_t_recursion(t).pass);
  CHECK(bdc::verify::check_families_ordered(t).pass);
}

TEST_CASE("negative control: a corrupted f-value trips the weighted-f check") {
  const auto opt = quick_options();
  BoundTables t = bdc::verify::compute_bound_tables(opt);
  t.f[{3, 1}] = 0.2;  // far below the true value 1
  const auto res = bdc::verify::check_cl_below_weighted_f(t);
  CHECK_FALSE(res.pass);
  CHECK(res.name == "fi-capacity-below-weighted-f");
}

TEST_CASE("negative control: an inflated capacity trips the weighted-f check") {
  const auto opt = quick_options();
  BoundTables t = bdc::verify::compute_bound_tables(opt);
  t.fi_cap[{2, 4}] += 0.5;
  CHECK_FALSE(bdc::verify::check_cl_below_weighted_f(t).pass);
}

TEST_CASE("negative control: corrupted f-values trip the anchor check") {
  const auto opt = quick_options();
  BoundTables t = bdc::verify::compute_bound_tables(opt);
  t.f[{2, 1}] = 0.9;
  CHECK_FALSE(bdc::verify::check_f_anchors(t).pass);
}

TEST_CASE("scalar checks pass") {
  const auto opt = quick_options();
  CHECK(bdc::verify::check_count_subset_sum(opt).pass);
  CHECK(bdc::verify::check_channel_normalization(opt).pass);
  CHECK(bdc::verify::check_length_marginal(opt).pass);
  CHECK(bdc::verify::check_entropy_identity(opt).pass);
  CHECK(bdc::verify::check_sampler_determinism(opt).pass);
  CHECK(bdc::verify::check_two_bit_halving(opt).pass);
  CHECK(bdc::verify::check_optimal_2bit_ratio(opt).pass);
  CHECK(bdc::verify::check_mi_bound_below_erasure(opt).pass);
  CHECK(bdc::verify::check_linear_bound_monotone(opt).pass);
  CHECK(bdc::verify::check_bound_identities(opt).pass);
  CHECK(bdc::verify::check_output_q_identity(opt).pass);
  CHECK(bdc::verify::check_first_bit_tail(opt).pass);
}

TEST_CASE("the full check list passes and keeps a stable order") {
  auto opt = quick_options();
  opt.L_max = 2;
  const auto results = bdc::verify::run_all_checks(opt);
  REQUIRE(results.size() == 27);
  CHECK(results.front().name == "count-subset-sum");
  CHECK(results.back().name == "output-q-at-d0");
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("exhaustive first-bit oracle agrees with the truncated series") {
  for (int n = 1; n <= 8; ++n) {
    for (double g : {0.3, 0.5, 0.8}) {
      for (double dv : {0.2, 0.5}) {
        const double brute = bdc::verify::brute_force_first_bit(n, g, dv);
        const double analytic = bdc::markov::first_bit_match_prob(
            bdc::markov::MarkovParams(g), bdc::DeletionProb(dv), n - 1);
        CHECK(std::abs(brute - analytic) <= 1e-10);
      }
    }
  }
}

TEST_CASE("exhaustive first-bit oracle hand values") {
  // single bit: the only way to match is to survive
  CHECK(bdc::verify::brute_force_first_bit(1, 0.3, 0.4) ==
        doctest::Approx(0.6).epsilon(1e-14));
  // two bits: survive, or die and let the second bit match
  CHECK(bdc::verify::brute_force_first_bit(2, 0.3, 0.4) ==
        doctest::Approx(0.6 + 0.4 * 0.6 * 0.3).epsilon(1e-13));
}
