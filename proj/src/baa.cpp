#include "bdc/baa.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "bdc/format.hpp"

namespace bdc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// threshold below which the per-iteration loops stay serial
constexpr std::size_t kParallelCells = 1u << 14;
}  // namespace

InputDistribution::InputDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("InputDistribution: empty");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw std::invalid_argument("InputDistribution: negative entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("InputDistribution: does not sum to 1");
  }
}

InputDistribution InputDistribution::uniform(std::size_t n) {
  return InputDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double mutual_information(const InputDistribution& p, const ChannelMatrix& ch) {
  const std::size_t n = ch.num_inputs();
  const std::size_t m = ch.num_outputs();
  if (p.size() != n) {
    throw std::invalid_argument("mutual_information: dimension mismatch");
  }
  std::vector<double> q(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = p[i];
    if (pi == 0.0) continue;
    const auto row = ch.row(i);
    for (std::size_t j = 0; j < m; ++j) q[j] += pi * row[j];
  }
  double cond = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] > 0.0) cond += p[i] * detail::raw_entropy(ch.row(i));
  }
  return detail::raw_entropy(q) - cond;
}

BaaResult blahut_arimoto(const ChannelMatrix& ch, double tol, int max_iter,
                         const InputDistribution* init) {
  if (!(tol > 0.0)) throw std::domain_error("blahut_arimoto: tol must be > 0");
  if (max_iter < 1) throw std::domain_error("blahut_arimoto: max_iter < 1");
  const std::size_t n = ch.num_inputs();
  const std::size_t m = ch.num_outputs();

  std::vector<double> p;
  if (init != nullptr) {
    if (init->size() != n) {
      throw std::invalid_argument("blahut_arimoto: init dimension mismatch");
    }
    p.assign(init->probs().begin(), init->probs().end());
  } else {
    p.assign(n, 1.0 / static_cast<double>(n));
  }

  std::vector<double> q(m), div(n);
  std::vector<double> history;
  const bool par = n * m >= kParallelCells;

  double lower = 0.0, gap = kInf;
  bool converged = false;
  int iter = 0;

  while (iter < max_iter) {
    ++iter;

    // output distribution q = p * M, one column per task
#pragma omp parallel for schedule(static) if (par)
    for (long long j = 0; j < static_cast<long long>(m); ++j) {
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += p[i] * ch(i, static_cast<std::size_t>(j));
      }
      q[static_cast<std::size_t>(j)] = acc;
    }

    // per-row divergence D(row_i || q); +inf marks support outside q
#pragma omp parallel for schedule(static) if (par)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      const auto row = ch.row(static_cast<std::size_t>(i));
      double acc = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        const double w = row[j];
        if (w > 0.0) {
          if (q[j] > 0.0) {
            acc += w * std::log2(w / q[j]);
          } else {
            acc = kInf;
            break;
          }
        }
      }
      div[static_cast<std::size_t>(i)] = acc;
    }

    // certified bracket: achieved mutual information vs max divergence
    lower = 0.0;
    double upper = -kInf;
    double shift = -kInf;  // max divergence over supported rows
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] > 0.0) {
        lower += p[i] * div[i];
        if (div[i] > shift) shift = div[i];
      }
      if (div[i] > upper) upper = div[i];
    }
    history.push_back(lower);
    gap = upper - lower;
    if (gap <= tol) {
      converged = true;
      break;
    }
    if (iter == max_iter) break;

    // multiplicative update, shifted to avoid overflow
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = p[i] > 0.0 ? p[i] * std::exp2(div[i] - shift) : 0.0;
      z += p[i];
    }
    for (std::size_t i = 0; i < n; ++i) p[i] /= z;
  }

  BaaResult result;
  result.capacity = lower > 0.0 ? lower : 0.0;
  result.distribution = InputDistribution(std::move(p));
  result.iterations = iter;
  result.converged = converged;
  result.gap_bound = gap;
  result.lower_history = std::move(history);
  return result;
}

namespace {

struct FCacheEntry {
  double value = 0.0;
  double tol = 0.0;
  int iterations = 0;
  double gap = 0.0;
};

std::mutex f_cache_mutex;
std::map<std::pair<int, int>, FCacheEntry> f_cache;

FCacheEntry f_entry(int L, int R, double tol, int cap) {
  {
    std::lock_guard lock(f_cache_mutex);
    auto it = f_cache.find({L, R});
    if (it != f_cache.end() && it->second.tol <= tol) return it->second;
  }
  const BaaResult res = blahut_arimoto(build_fifo_matrix(L, R, cap), tol, 500000);
  FCacheEntry entry{res.capacity, tol, res.iterations, res.gap_bound};
  {
    std::lock_guard lock(f_cache_mutex);
    auto& slot = f_cache[{L, R}];
    if (slot.tol == 0.0 || slot.tol > tol) slot = entry;
  }
  return entry;
}

}  // namespace

double f_value(int L, int R, double tol, int cap) {
  return f_entry(L, R, tol, cap).value;
}

double fi_capacity(int L, DeletionProb d, double tol, int cap) {
  return blahut_arimoto(build_fi_matrix(L, d, cap), tol, 500000).capacity;
}

std::vector<FTableRow> f_table_rows(int L, double tol, int cap) {
  std::vector<FTableRow> rows;
  rows.reserve(static_cast<std::size_t>(L) + 1);
  for (int R = 0; R <= L; ++R) {
    const FCacheEntry e = f_entry(L, R, tol, cap);
    rows.push_back({L, R, e.value, e.iterations, e.gap});
  }
  return rows;
}

void write_f_table_csv(std::ostream& out, std::span<const FTableRow> rows) {
  out << "L,R,f,iterations,gap_bound\n";
  for (const auto& r : rows) {
    out << r.L << ',' << r.R << ',' << detail::format_sig(r.f, 12) << ','
        << r.iterations << ',' << detail::format_sig(r.gap_bound, 6) << '\n';
  }
}

}  // namespace bdc
