#ifndef BDC_BOUNDS_HPP
#define BDC_BOUNDS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bdc/bitstring.hpp"

namespace bdc {

enum class CurveKind { upper, lower, reference };

// Named bound evaluated over a strictly increasing grid of deletion
// probabilities; values are bits per channel use and must be finite.
struct BoundCurve {
  std::string name;
  std::vector<double> d_grid;
  std::vector<double> values;
  CurveKind kind = CurveKind::upper;

  void validate() const;  // throws std::invalid_argument on violation
};

// map (L, R) -> maximum mutual information of the (L, R) conditioned channel
using FTable = std::map<std::pair<int, int>, double>;

// Symmetric input distribution over the two-bit block alphabet 00,01,10,11.
// p0 = p3, p1 = p2 and p0 + p1 = 1/2, all within 1e-12; enforced.
struct TwoBitDistribution {
  double p0, p1, p2, p3;
  TwoBitDistribution(double p0, double p1, double p2, double p3);
};

// Length-normalized deletion-weighted sum of f-values:
// (1/L) * sum_{i=0..L} P(i deletions) f(L, L-i). An upper bound on the
// deletion channel capacity. Throws std::domain_error on a missing f entry.
double t_bound(int L, DeletionProb d, const FTable& f);

// Extends a block-length-L bound value to larger block lengths via
// U_{k+1} = (k U_k + 1 - d) / (k+1); returns U_{L+1}..U_{L+steps}.
std::vector<double> extend_t_bounds(double t_L, int L, DeletionProb d, int steps);

// Closed-form capacity of the two-bit block deletion channel:
// (1-d)^2 (1 + log2(1 + 2^(-2d/(1-d)))) + 2d(1-d); 0 at d = 1 by limit.
double two_bit_capacity(DeletionProb d);

// Capacity-achieving input distribution of the two-bit block channel.
TwoBitDistribution optimal_2bit_dist(DeletionProb d);

// Per-use upper bound from the two-bit block channel: half its capacity.
double two_bit_block_bound(DeletionProb d);

// Stay probability of the capacity-achieving first-order Markov input for
// two-bit blocks: 2^(2d/(1-d)) / (1 + 2^(2d/(1-d))); 1 at d = 1 by limit.
double gamma_star(DeletionProb d);

// Approximate per-use bound from the surviving-bit mutual information under
// a first-order Markov input with stay probability gamma:
// (1-d) (1 - H(d(1-gamma)/(1+d(1-2gamma)))). Requires gamma in (0,1] and the
// entropy argument in [0,1].
double markov_mi_bound(DeletionProb d, double gamma);

// Linear stay-probability schedule gamma(d) = (1+d)/2.
double linear_gamma(DeletionProb d);

// markov_mi_bound evaluated at the linear schedule; algebraically equal to
// (1-d) (1 - H(d / (2(1+d)))).
double linear_gamma_bound(DeletionProb d);

// Reference curves quoted from the literature. Curves outside their stated
// domain are absent rather than extrapolated.
struct ReferenceBounds {
  double erasure;                        // 1 - d, all d
  std::optional<double> rahmati_duman;   // 0.4143 (1-d), d >= 0.65 only
  std::optional<double> one_minus_h;     // 1 - H(d), d < 0.5 only
};
ReferenceBounds reference_bounds(DeletionProb d);

// Lower bounds via numeric supremum over (t, gamma): coarse grid, then
// coordinate-wise golden-section refinement, clamped to 0 from below.
double dg_lower_bound(DeletionProb d);
double dm_lower_bound(DeletionProb d);

// (1-e)(1 - H(p)): capacity shape of a bit-flip stage followed by an
// erasure stage.
double cascade_bsc_bec(double p, double e);

// One exported CSV column; NaN marks grid points outside a curve's domain
// and is written as NA.
struct CurveColumn {
  std::string name;
  CurveKind kind;
  std::string formula;  // human-readable definition, echoed in the header
  std::vector<double> values;
};

// Shared-grid CSV: '#' header comments carry each column's kind and formula,
// then a header row "d,<name>..." and one row per grid point at 12
// significant digits.
void write_curves_csv(std::ostream& out, std::span<const double> d_grid,
                      std::span<const CurveColumn> columns);

const char* to_string(CurveKind k);

}  // namespace bdc

#endif
