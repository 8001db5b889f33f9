#ifndef BDC_BAA_HPP
#define BDC_BAA_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bdc/channel_matrix.hpp"

namespace bdc {

// Probability vector over a channel's input alphabet; nonnegative entries
// summing to 1 within 1e-12, enforced on construction.
class InputDistribution {
 public:
  InputDistribution() = default;  // empty placeholder, not a valid distribution
  explicit InputDistribution(std::vector<double> probs);
  static InputDistribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

struct BaaResult {
  double capacity = 0.0;  // certified lower bracket at termination
  InputDistribution distribution;
  int iterations = 0;
  bool converged = false;
  double gap_bound = 0.0;  // final upper - lower capacity bracket
  // lower bracket after each iteration; nondecreasing up to roundoff
  std::vector<double> lower_history;
};

// H(p * M) - sum_i p_i H(M_i), the mutual information of the channel under
// input distribution p. Throws std::invalid_argument on dimension mismatch.
double mutual_information(const InputDistribution& p, const ChannelMatrix& ch);

// Alternating-maximization capacity solver. Each iteration certifies the
// bracket [I(p), max_x D(M_x || q)] around the true capacity and stops once
// its width is <= tol; hitting max_iter first sets converged = false.
BaaResult blahut_arimoto(const ChannelMatrix& ch, double tol = 1e-9,
                         int max_iter = 100000,
                         const InputDistribution* init = nullptr);

// Maximum mutual information of the fixed-input fixed-output deletion
// channel at (L, R). Memoized per process run; thread-safe.
double f_value(int L, int R, double tol = 1e-9, int cap = kDefaultFifoCap);

// Capacity of the fixed-input deletion channel at block length L.
double fi_capacity(int L, DeletionProb d, double tol = 1e-9,
                   int cap = kDefaultFiCap);

struct FTableRow {
  int L = 0;
  int R = 0;
  double f = 0.0;
  int iterations = 0;
  double gap_bound = 0.0;
};

// CSV with columns L, R, f(L,R), iterations, gap_bound.
void write_f_table_csv(std::ostream& out, std::span<const FTableRow> rows);

// f-values computed for all R in [0, L], with solver diagnostics
std::vector<FTableRow> f_table_rows(int L, double tol = 1e-9,
                                    int cap = kDefaultFifoCap);

}  // namespace bdc

#endif
