#pragma once

#include <Eigen/Core>
#include <array>
#include <span>
#include <utility>
#include <vector>

#include "depthsup/field.hpp"

namespace depthsup {

// Pixels whose filtered occlusion mass falls at or below this are excluded
// from the image-level rigidity loss.
inline constexpr double kArapSupportEpsilon = 1e-6;

// Sum of singular values.
double trace_norm(const Eigen::Matrix3d& m);

// Weighted local rigidity cost min over rigid fits M = [Q|t] with QtQ = I,
// det(Q) = +-1, of sum_j w_j o_j |Q p_j + t - p'_j|^2.
//
// The bruteforce variant recovers the optimal Q from the SVD of the weighted
// cross-covariance and sums residuals point by point; the closed variant
// evaluates the equivalent trace-norm expression on weighted-centered points.
// Both throw EmptySupport when sum w*o == 0.
double arap_local_bruteforce(std::span<const Eigen::Vector3d> p,
                             std::span<const Eigen::Vector3d> p_prime,
                             std::span<const double> w, std::span<const double> o);

double arap_local_closed(std::span<const Eigen::Vector3d> p,
                         std::span<const Eigen::Vector3d> p_prime,
                         std::span<const double> w, std::span<const double> o);

struct GuidedFilterConfig {
  int radius = 4;     // window radius r; the window is (2r+1)^2, clipped at borders
  double eps = 1e-4;  // regularizer in squared guidance-intensity units

  bool valid() const { return radius >= 1 && eps > 0.0; }
};

// Edge-aware linear filter driven by a guidance image, evaluated with box
// sums so the per-pixel cost is independent of the radius. Border windows
// are clipped and renormalized; kernel rows sum to one.
//
// Construction precomputes the guidance statistics so several inputs can be
// filtered against the same guidance.
class GuidedFilter {
 public:
  GuidedFilter(const ScalarField& guidance, const GuidedFilterConfig& cfg);
  GuidedFilter(const std::array<ScalarField, 3>& guidance, const GuidedFilterConfig& cfg);

  ScalarField apply(const ScalarField& input) const;

  int width() const { return width_; }
  int height() const { return height_; }

 private:
  GuidedFilterConfig cfg_;
  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::array<ScalarField, 3> guide_;          // guidance channels
  std::array<ScalarField, 3> guide_mean_;     // per-window means
  std::vector<ScalarField> inv_var_;          // upper triangle of (Sigma + eps I)^-1
  ScalarField window_count_;
};

ScalarField guided_filter(const ScalarField& input, const ScalarField& guidance,
                          const GuidedFilterConfig& cfg);
ScalarField guided_filter(const ScalarField& input, const std::array<ScalarField, 3>& guidance,
                          const GuidedFilterConfig& cfg);

// Per-pixel rigidity loss over guided-filter support regions. For every
// pixel the value equals the closed-form local cost evaluated with that
// pixel's guided-filter kernel row as weights, occlusion-masked. Pixels with
// filtered occlusion mass <= kArapSupportEpsilon are excluded and counted
// out of `covered`. Invalid points are treated as occluded.
struct ArapImageResult {
  ScalarField per_pixel;
  Mask evaluated;
  double total = 0.0;
  long covered = 0;
};

ArapImageResult arap_loss_image(const PointMap& p, const PointMap& p_prime,
                                const ScalarField& guidance, const OcclusionMask& occlusion,
                                const GuidedFilterConfig& cfg);

// Rigid motion x -> rotation * x + translation.
struct RigidMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Eigen::Vector3d apply(const Eigen::Vector3d& x) const { return rotation * x + translation; }
};

// Cluster decomposition for the cluster-level rigidity baseline.
struct ClusterGraph {
  Grid<int> assignment;                        // pixel -> cluster id in [0, K)
  std::vector<Eigen::Vector3d> anchors;        // per-cluster anchor point
  std::vector<std::pair<int, int>> edges;      // neighboring cluster pairs
  std::vector<RigidMotion> motions;            // per-cluster rigid motion

  int cluster_count() const { return static_cast<int>(anchors.size()); }
};

struct ClusterArapResult {
  double local = 0.0;   // sum over pixels of |M_k [p;1] - p'|  (unsquared)
  double global = 0.0;  // sum over edges of |M_k1 [a_k1;1] - M_k2 [a_k2;1]|
};

ClusterArapResult cluster_arap_eval(const PointMap& p, const PointMap& p_prime,
                                    const ClusterGraph& graph);

// Independent per-cluster rigid fits (proper rotations, det = +1), least
// squares over the pixels of each cluster. Throws DegenerateCluster for
// clusters with fewer than 3 valid points or a rank-deficient spread.
std::vector<RigidMotion> cluster_motion_solve(const PointMap& p, const PointMap& p_prime,
                                              const Grid<int>& assignment, int cluster_count);

// Forward-backward consistency: occluded (0) unless the backward flow sampled
// at the forward-warped position cancels the forward flow within thresh and
// the warped position lands inside the grid.
OcclusionMask compute_occlusion(const VectorField& flow_fwd, const VectorField& flow_bwd,
                                double thresh);

}  // namespace depthsup
