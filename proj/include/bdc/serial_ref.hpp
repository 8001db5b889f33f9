#ifndef BDC_SERIAL_REF_HPP
#define BDC_SERIAL_REF_HPP

#include <cstdint>

#include "bdc/baa.hpp"
#include "bdc/channel_matrix.hpp"
#include "bdc/markov.hpp"

// Plain serial implementations of the parallel kernels. They take the
// straightforward route (per-pair counting DP, single-threaded sweeps) and
// exist so tests can compare the fast paths against them bit for bit, and so
// the benchmark has a baseline.
namespace bdc::serial_ref {

ChannelMatrix build_fifo_matrix(int L, int R, int cap = kDefaultFifoCap);
ChannelMatrix build_fi_matrix(int L, DeletionProb d, int cap = kDefaultFiCap);

BaaResult blahut_arimoto(const ChannelMatrix& ch, double tol = 1e-9,
                         int max_iter = 100000,
                         const InputDistribution* init = nullptr);

markov::QEstimate estimate_q(markov::MarkovParams params, DeletionProb d,
                             int n, int trials, std::uint64_t seed);

}  // namespace bdc::serial_ref

#endif
