#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "depthsup/geometry.hpp"

namespace depthsup {

// One stereo-temporal match: a pixel in the left frame at t, its position in
// the left frame at t+1, and its stereo disparity at t.
struct Correspondence {
  Pixel p_t;
  Pixel p_t1;
  double d = 0.0;
  double weight = 1.0;
};

enum class RobustKind { kSsd, kHuber };

struct RobustLossConfig {
  RobustKind kind = RobustKind::kHuber;
  double huber_delta = 1.0;  // pixels
};

struct CalibrationEstimate {
  CameraIntrinsics intr;  // f and d_min estimated; alpha, cu, cv fixed inputs
  RigMotion motion;
  double residual_rms = 0.0;  // pixels
  int iterations = 0;
  bool converged = false;
  std::string diagnostic;  // "flat_directions" when the normal matrix is near rank-deficient
};

struct BundleAdjustOptions {
  double tol_g = 1e-10;
  double tol_x = 1e-12;
  int max_iters = 100;
  double lambda_init = 1e-4;
  double lambda_max = 1e12;
  double flat_condition = 1e12;
  // When set, receives the robust objective after the initial evaluation and
  // after every accepted step.
  std::vector<double>* objective_history = nullptr;
};

// Normalized linear estimate of the fundamental matrix with rank-2
// enforcement. Result has unit Frobenius norm and a deterministic sign.
// Throws InsufficientMatches (< 8) or DegenerateConfiguration.
Eigen::Matrix3d eight_point(std::span<const Correspondence> matches);

// First-order epipolar distance, in pixels.
double sampson_distance(const Eigen::Matrix3d& f_matrix, const Correspondence& c);

struct RansacResult {
  std::vector<int> inliers;  // indices into the input span, ascending
  Eigen::Matrix3d f_matrix;
};

// Background selection: seeded 8-point RANSAC with Sampson-distance gating
// and a final refit on the consensus set. Deterministic for a fixed seed.
// Throws NoConsensus when the best consensus has fewer than 8 members.
RansacResult ransac_background(std::span<const Correspondence> matches, int max_iters,
                               double inlier_thresh, std::uint64_t seed);

// Robust Gauss-Newton over (f, d_min, rotation, t_tilde) with Levenberg
// damping, IRLS robust weights and a step-halving line search. The robust
// objective never increases across accepted steps.
CalibrationEstimate bundle_adjust(std::span<const Correspondence> matches,
                                  const CalibrationEstimate& init,
                                  const RobustLossConfig& robust,
                                  const BundleAdjustOptions& opts = {});

// Projection of c.p_t through est minus the observed c.p_t1.
Eigen::Vector2d reprojection_residual(const Correspondence& c, const CalibrationEstimate& est);

enum class MotionLabel : std::uint8_t { kStatic = 0, kMoving = 1, kUndefined = 2 };

std::vector<MotionLabel> label_motion(std::span<const Correspondence> matches,
                                      const CalibrationEstimate& est, double tau_motion);

// Validates the analytic reprojection Jacobian against central differences
// (h = 1e-6); returns the max over parameters/components of
// |analytic - numeric| / (|numeric| + 1e-8).
double jacobian_check(std::span<const Correspondence> matches, const CalibrationEstimate& est);

// Robust penalty h(r) applied to a residual norm; exposed for tests of the
// solver objective (continuity and C^1 at the Huber transition).
double robust_penalty(double residual_norm, const RobustLossConfig& robust);

}  // namespace depthsup
