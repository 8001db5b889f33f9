#include "bdc/channel_matrix.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "bdc/format.hpp"

namespace bdc {

ChannelMatrix::ChannelMatrix(std::vector<BitString> input_labels,
                             std::vector<BitString> output_labels,
                             std::vector<double> entries)
    : input_labels_(std::move(input_labels)),
      output_labels_(std::move(output_labels)),
      entries_(std::move(entries)) {
  const std::size_t rows = input_labels_.size();
  const std::size_t cols = output_labels_.size();
  if (rows == 0 || cols == 0 || entries_.size() != rows * cols) {
    throw std::invalid_argument("ChannelMatrix: shape mismatch");
  }
  for (std::size_t i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      const double p = entries_[i * cols + j];
      if (!(p >= 0.0 && p <= 1.0 + 1e-12)) {
        throw std::invalid_argument("ChannelMatrix: entry outside [0,1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("ChannelMatrix: row does not sum to 1");
    }
  }
}

std::vector<BitString> all_bitstrings(int L) {
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << L);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << L); ++v) {
    out.push_back(BitString::from_bits(v, L));
  }
  return out;
}

namespace detail {

std::vector<std::vector<std::uint64_t>> subsequence_counts_all(
    const BitString& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    counts[static_cast<std::size_t>(r)].assign(std::size_t{1} << r, 0);
  }
  counts[0][0] = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t b = static_cast<std::uint64_t>(x[static_cast<std::size_t>(i)]);
    const int top = i + 1 < n ? i + 1 : n;
    for (int r = top; r >= 1; --r) {
      auto& cur = counts[static_cast<std::size_t>(r)];
      const auto& prev = counts[static_cast<std::size_t>(r - 1)];
      const std::uint64_t half = std::uint64_t{1} << (r - 1);
      for (std::uint64_t k = 0; k < half; ++k) {
        const std::uint64_t y = (k << 1) | b;
        if (__builtin_add_overflow(cur[y], prev[k], &cur[y])) {
          throw std::overflow_error("subsequence_counts_all: 64-bit overflow");
        }
      }
    }
  }
  return counts;
}

}  // namespace detail

ChannelMatrix build_fifo_matrix(int L, int R, int cap) {
  if (L < 1 || R < 0 || R > L) {
    throw std::domain_error("build_fifo_matrix: need 0 <= R <= L");
  }
  if (L > cap) {
    throw std::domain_error("build_fifo_matrix: L over cap");
  }
  const std::size_t rows = std::size_t{1} << L;
  const std::size_t cols = std::size_t{1} << R;
  const double denom = static_cast<double>(binomial_u64(L, R));
  std::vector<double> entries(rows * cols);

#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < static_cast<long long>(rows); ++xi) {
    const BitString x = BitString::from_bits(static_cast<std::uint64_t>(xi), L);
    const auto counts = detail::subsequence_counts_all(x);
    double* row = entries.data() + static_cast<std::size_t>(xi) * cols;
    for (std::size_t y = 0; y < cols; ++y) {
      row[y] = static_cast<double>(counts[static_cast<std::size_t>(R)][y]) / denom;
    }
  }
  return ChannelMatrix(all_bitstrings(L), all_bitstrings(R), std::move(entries));
}

ChannelMatrix build_fi_matrix(int L, DeletionProb d, int cap) {
  if (L < 1) throw std::domain_error("build_fi_matrix: L < 1");
  if (L > cap) throw std::domain_error("build_fi_matrix: L over cap");
  const std::size_t rows = std::size_t{1} << L;
  const std::size_t cols = (std::size_t{2} << L) - 1;  // lengths L..0

  // weight of any length-r output and its column offset in canonical
  // (length-descending, then lexicographic) order
  std::vector<double> weight(static_cast<std::size_t>(L) + 1);
  std::vector<std::size_t> offset(static_cast<std::size_t>(L) + 1);
  for (int r = L; r >= 0; --r) {
    weight[static_cast<std::size_t>(r)] =
        ipow(1.0 - d.value(), r) * ipow(d.value(), L - r);
    offset[static_cast<std::size_t>(r)] =
        (std::size_t{2} << L) - (std::size_t{2} << r);
  }

  std::vector<double> entries(rows * cols);
#pragma omp parallel for schedule(static)
  for (long long xi = 0; xi < static_cast<long long>(rows); ++xi) {
    const BitString x = BitString::from_bits(static_cast<std::uint64_t>(xi), L);
    const auto counts = detail::subsequence_counts_all(x);
    double* row = entries.data() + static_cast<std::size_t>(xi) * cols;
    for (int r = L; r >= 0; --r) {
      const double w = weight[static_cast<std::size_t>(r)];
      double* block = row + offset[static_cast<std::size_t>(r)];
      const auto& c = counts[static_cast<std::size_t>(r)];
      for (std::size_t y = 0; y < (std::size_t{1} << r); ++y) {
        block[y] = static_cast<double>(c[y]) * w;
      }
    }
  }

  std::vector<BitString> outputs;
  outputs.reserve(cols);
  for (int r = L; r >= 0; --r) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
      outputs.push_back(BitString::from_bits(v, r));
    }
  }
  return ChannelMatrix(all_bitstrings(L), std::move(outputs), std::move(entries));
}

void write_matrix_csv(std::ostream& out, const ChannelMatrix& m) {
  out << "input";
  for (const auto& label : m.output_labels()) out << ',' << label.to_string();
  out << '\n';
  for (std::size_t i = 0; i < m.num_inputs(); ++i) {
    out << m.input_labels()[i].to_string();
    for (std::size_t j = 0; j < m.num_outputs(); ++j) {
      out << ',' << detail::format_sig(m(i, j), 17);
    }
    out << '\n';
  }
}

}  // namespace bdc
