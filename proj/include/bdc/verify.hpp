#ifndef BDC_VERIFY_HPP
#define BDC_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bdc/bounds.hpp"

namespace bdc::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure site or summary statistic
};

struct VerifyOptions {
  int L_max = 6;
  double tol = 1e-9;     // capacity-run tolerance
  double f_tol = 1e-10;  // f-value tolerance (tighter, feeds inequalities)
  std::uint64_t seed = 20240901;
  int mc_n = 100000;  // Monte Carlo input length
  int mc_trials = 20;
};

// Shared inputs for the bound checks, computed once per run. Kept as plain
// tables so tests can inject corrupted values.
struct BoundTables {
  int L_max = 0;
  std::vector<double> d_grid;  // 0.1 .. 0.9
  FTable f;                    // every (L, R) with L <= L_max
  // (L, d-grid index) -> fixed-input channel capacity at that L and d
  std::map<std::pair<int, int>, double> fi_cap;
};

BoundTables compute_bound_tables(const VerifyOptions& opt);

// Individual checks. Each returns pass/fail plus a one-line detail.
CheckResult check_count_subset_sum(const VerifyOptions& opt);
CheckResult check_channel_normalization(const VerifyOptions& opt);
CheckResult check_length_marginal(const VerifyOptions& opt);
CheckResult check_entropy_identity(const VerifyOptions& opt);
CheckResult check_sampler_determinism(const VerifyOptions& opt);
CheckResult check_row_stochastic(const VerifyOptions& opt);
CheckResult check_block_scaling(const VerifyOptions& opt);
CheckResult check_complement_symmetry(const VerifyOptions& opt);
CheckResult check_fifo_exact_rational(const VerifyOptions& opt);
CheckResult check_baa_bracket_monotone(const VerifyOptions& opt);
CheckResult check_baa_init_independence(const VerifyOptions& opt);
CheckResult check_f_anchors(const BoundTables& t);
CheckResult check_cl_below_weighted_f(const BoundTables& t);
CheckResult check_f_recursion(const BoundTables& t);
CheckResult check_t_nonincreasing(const BoundTables& t);
CheckResult check_t_recursion(const BoundTables& t);
CheckResult check_two_bit_halving(const VerifyOptions& opt);
CheckResult check_two_bit_vs_baa(const VerifyOptions& opt);
CheckResult check_optimal_2bit_ratio(const VerifyOptions& opt);
CheckResult check_mi_bound_below_erasure(const VerifyOptions& opt);
CheckResult check_linear_bound_monotone(const VerifyOptions& opt);
CheckResult check_bound_identities(const VerifyOptions& opt);
CheckResult check_families_ordered(const BoundTables& t);
CheckResult check_first_bit_brute_force(const VerifyOptions& opt);
CheckResult check_first_bit_tail(const VerifyOptions& opt);
CheckResult check_estimate_q(const VerifyOptions& opt);
CheckResult check_output_q_identity(const VerifyOptions& opt);

// Runs every check; order is fixed.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opt);

// Exhaustive first-bit oracle: enumerates all n-bit inputs with their Markov
// weights and all 2^n deletion patterns and accumulates the probability that
// the first surviving bit exists and equals the first sent bit.
double brute_force_first_bit(int n, double gamma, double d);

}  // namespace bdc::verify

#endif
