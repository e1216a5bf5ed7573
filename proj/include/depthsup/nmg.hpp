#pragma once

#include <cstdint>
#include <vector>

#include "depthsup/field.hpp"

namespace depthsup {

// Normalized multiscale gradient loss. Gradients of the prediction q are
// matched against gradients of the supervision disparity d up to one global
// scale, over finite differences taken at several pixel spacings. The
// standard spacing set is {2, 8, 32, 64}; every spacing must be smaller
// than both grid dimensions.
struct NmgConfig {
  std::vector<int> spacings = {2, 8, 32, 64};
  double epsilon_norm = 1e-12;
};

struct NmgResult {
  double total = 0.0;      // sum of absolute gradient mismatches
  long pair_count = 0;     // contributing gradient pairs over all spacings/axes
  double scale = 0.0;      // estimated ratio s between d and q gradients
};

// s = sum |grad d| / sum |grad q| over all spacings and both axes. A pair
// contributes only when both endpoints are valid in both fields. Throws
// DegenerateScale when the denominator falls below epsilon_norm.
double nmg_scale(const MaskedField& q, const MaskedField& d, const NmgConfig& cfg);

NmgResult nmg_loss(const MaskedField& q, const MaskedField& d, const NmgConfig& cfg);

// Full analytic d(loss)/dq, including the dependence of the scale s on q.
// Kinks of |.| use subgradient 0. Invalid pixels get gradient exactly 0.
ScalarField nmg_gradient(const MaskedField& q, const MaskedField& d, const NmgConfig& cfg);

// Pairwise ordinal supervision. i and j are flat row-major indices.
struct OrdinalPair {
  int i = 0;
  int j = 0;
  int label = 0;  // +1: i closer-ranked above j, -1: below, 0: tie
};

// Ranking loss: log(1 + exp(-label * (q_i - q_j))) for labeled pairs,
// (q_i - q_j)^2 for ties.
double ordinal_loss(const ScalarField& q, const std::vector<OrdinalPair>& pairs);

// Draws index pairs over valid pixels and labels them by the ratio of
// disparities shifted to a positive range (min valid value maps to 1).
// Deterministic for a fixed seed. Throws InsufficientValidPixels if fewer
// than two pixels are valid.
std::vector<OrdinalPair> sample_ordinal_pairs(const MaskedField& d, int n_pairs,
                                              double ratio_thresh, std::uint64_t seed);

}  // namespace depthsup
