#ifndef BDC_CHANNEL_MATRIX_HPP
#define BDC_CHANNEL_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bdc/bitseq.hpp"
#include "bdc/bitstring.hpp"

namespace bdc {

inline constexpr int kDefaultFifoCap = 12;
inline constexpr int kDefaultFiCap = 11;

// Row-stochastic conditional-probability matrix with labeled input/output
// alphabets. Rows sum to 1 within 1e-12 and entries lie in [0,1]; the
// constructor enforces both.
class ChannelMatrix {
 public:
  ChannelMatrix(std::vector<BitString> input_labels,
                std::vector<BitString> output_labels,
                std::vector<double> entries);  // row-major

  std::size_t num_inputs() const { return input_labels_.size(); }
  std::size_t num_outputs() const { return output_labels_.size(); }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * output_labels_.size() + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * output_labels_.size(), output_labels_.size()};
  }

  const std::vector<BitString>& input_labels() const { return input_labels_; }
  const std::vector<BitString>& output_labels() const { return output_labels_; }

 private:
  std::vector<BitString> input_labels_;
  std::vector<BitString> output_labels_;
  std::vector<double> entries_;
};

// Transition matrix of the fixed-input fixed-output deletion channel:
// inputs are the 2^L length-L strings (lexicographic), outputs the 2^R
// length-R strings, entry[x,y] = count(y,x) / C(L,R). Independent of d.
// Requires 0 <= R <= L <= cap.
ChannelMatrix build_fifo_matrix(int L, int R, int cap = kDefaultFifoCap);

// Transition matrix of the fixed-input deletion channel: inputs the 2^L
// length-L strings, outputs all strings of length 0..L in canonical order
// (length-descending, then lexicographic), entry[x,y] = the deletion channel
// probability of y given x. Requires L <= cap.
ChannelMatrix build_fi_matrix(int L, DeletionProb d, int cap = kDefaultFiCap);

// CSV export: header row of output labels, leading column of input labels,
// entries at 17 significant digits. The null output label prints empty.
void write_matrix_csv(std::ostream& out, const ChannelMatrix& m);

// all 2^L strings of length L, lexicographic
std::vector<BitString> all_bitstrings(int L);

namespace detail {
// Subsequence-occurrence counts of every string y with |y| <= |x| inside x,
// grouped by length: result[R][y] = count for the length-R string with
// MSB-first value y. Single left-to-right sweep over x, O(|x| * 2^|x|).
std::vector<std::vector<std::uint64_t>> subsequence_counts_all(const BitString& x);
}

}  // namespace bdc

#endif
