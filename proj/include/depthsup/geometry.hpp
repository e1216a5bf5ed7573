#pragma once

#include <Eigen/Core>

#include "depthsup/field.hpp"

namespace depthsup {

// Dehomogenization guard: |z| at or below this is treated as degenerate
// rather than round-off.
inline constexpr double kProjectionEpsilon = 1e-9;

enum class CameraSide { kLeft, kRight };

// Rectified stereo rig intrinsics. The two cameras share f, alpha and cv;
// their principal points differ horizontally by d_min (which may be
// negative for towed-in rigs).
struct CameraIntrinsics {
  double f = 1.0;       // focal length, pixels
  double alpha = 1.0;   // aspect ratio
  double cu = 0.0;      // principal point x, pixels
  double cv = 0.0;      // principal point y, pixels
  double d_min = 0.0;   // minimum disparity, pixels

  bool valid() const;
};

// Relative rig motion between temporal frames. The translation is stored
// baseline-normalized (t over b), so no metric scale is represented.
struct RigMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t_tilde = Eigen::Vector3d::Zero();

  bool valid(double tol = 1e-12) const;
};

struct Pixel {
  double u = 0.0;
  double v = 0.0;
};

Eigen::Matrix3d intrinsic_matrix(const CameraIntrinsics& intr, CameraSide side);

// Maps a pixel of the left frame at time t, with disparity d, into the left
// frame at time t+1. Throws DegenerateProjection if the transformed ray
// ends up in the camera plane.
Pixel project_stereo_temporal(const CameraIntrinsics& intr, const RigMotion& motion,
                              const Pixel& p, double d);

// q = (d - d_min) / fb, elementwise; invalid pixels pass through as invalid.
// fb is focal length times baseline. Throws NonPositiveScale if fb <= 0.
MaskedField disparity_to_inverse_depth(const MaskedField& d, const CameraIntrinsics& intr,
                                       double fb);

// P(u,v) = (1/q) K^-1 [u,v,1]^T. Pixels with q <= 0 or flagged invalid come
// back invalid.
PointMap backproject(const MaskedField& q, const CameraIntrinsics& intr, CameraSide side);

// Projection of the SO(3) drift accumulated by incremental updates.
Eigen::Matrix3d orthonormalize_rotation(const Eigen::Matrix3d& r);

// Rodrigues map of an axis-angle vector.
Eigen::Matrix3d axis_angle_to_rotation(const Eigen::Vector3d& omega);

}  // namespace depthsup
