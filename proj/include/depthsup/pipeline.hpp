#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthsup/calibration.hpp"
#include "depthsup/field.hpp"

namespace depthsup {

// All forward/backward flow fields linking the four frames of one
// stereo-temporal quad (left/right at t and t+1), on a common grid.
struct FlowBundle {
  VectorField stereo_t;        // left_t   -> right_t
  VectorField stereo_t_rev;    // right_t  -> left_t
  VectorField stereo_t1;       // left_t1  -> right_t1
  VectorField stereo_t1_rev;   // right_t1 -> left_t1
  VectorField temporal_l;      // left_t   -> left_t1
  VectorField temporal_l_rev;  // left_t1  -> left_t
  VectorField temporal_r;      // right_t  -> right_t1
  VectorField temporal_r_rev;  // right_t1 -> right_t
  VectorField cross;           // left_t   -> right_t1
  VectorField cross_rev;       // right_t1 -> left_t

  int width() const { return stereo_t.width(); }
  int height() const { return stereo_t.height(); }
  bool shapes_match() const;
};

struct PipelineConfig {
  double fb_thresh = 1.0;                   // forward-backward consistency, pixels
  double cycle_thresh = 1.0;                // cross-route agreement, pixels
  double min_valid_fraction = 0.30;         // discard gate on surviving correspondences
  double vertical_disp_max_fraction = 0.10; // reject when more pixels than this exceed...
  double vertical_disp_px = 1.0;            // ...this much vertical disparity
  double horizontal_range_min_px = 5.0;     // minimum horizontal disparity range
  double lr_consistency_min_fraction = 0.70;
  double static_flow_px = 8.0;              // minimum max-flow magnitude to keep a frame
  double brightness_min = 0.06;             // unit-range luma
  double tau_motion = 1.0;                  // reprojection threshold for moving pixels
  // Far points flow leftwards from the left to the right view, so disparity
  // is the negated horizontal stereo-flow component; flip for rigs with the
  // opposite convention.
  bool negate_stereo_flow_for_disparity = true;
};

struct StageCount {
  std::string stage;
  long input = 0;
  long passed = 0;
  long rejected = 0;
};

struct PipelineStats {
  std::vector<StageCount> stages;
  double valid_fraction = 0.0;
  long ransac_inliers = 0;
  int ba_iterations = 0;
  double residual_rms = 0.0;
  long n_static = 0;
  long n_moving = 0;
  long n_undefined = 0;
};

// Survivors of the cycle filter: one Correspondence per surviving left_t
// pixel, in row-major order, plus the survivor mask itself.
struct CorrespondenceSet {
  std::vector<Correspondence> matches;
  Mask survivors;
};

struct SupervisionPacket {
  MaskedField disparity;
  Grid<std::uint8_t> motion_mask;  // MotionLabel values
  CalibrationEstimate calib;
  PipelineStats stats;
};

struct BuildOutcome {
  bool accepted = false;
  std::vector<std::string> reasons;  // nonempty iff rejected
  SupervisionPacket packet;          // meaningful iff accepted
  PipelineStats stats;
};

// Forward-backward validity mask; identical contract to compute_occlusion.
Mask fb_filter(const VectorField& flow_fwd, const VectorField& flow_bwd, double fb_thresh);

// A left_t pixel survives when every flow leg feeding the three routes to
// right_t1 passes the forward-backward check and the routes land within
// cycle_thresh of each other (pairwise). Survivors carry the temporal match
// and the stereo disparity.
CorrespondenceSet cycle_filter(const FlowBundle& bundle, const PipelineConfig& cfg);

// Accept when the surviving fraction reaches min_valid_fraction (closed
// boundary: equality accepts).
bool discard_check(double valid_fraction, const PipelineConfig& cfg);

struct ShotQualityResult {
  bool accept = false;
  std::vector<std::string> reasons;   // violated rules, in evaluation order
  double vertical_fraction = 0.0;     // fraction of valid pixels over the vertical limit
  double horizontal_range = 0.0;      // max - min horizontal disparity over valid pixels
  double lr_fraction = 0.0;           // consistency-pass fraction over all pixels
};

// The three shot gates: vertical-disparity fraction, horizontal-disparity
// range, and left-right consistency fraction. Equality always accepts.
ShotQualityResult shot_quality_filter(const VectorField& stereo_flow, const Mask& lr_valid,
                                      const PipelineConfig& cfg);

// Accept iff the maximum flow magnitude reaches static_flow_px.
bool static_frame_filter(const VectorField& temporal_flow, const PipelineConfig& cfg);

// Mean squared intensity difference between the two halves of a candidate
// side-by-side frame. Classification is left to the caller.
double stereo_format_score(const ScalarField& left_half, const ScalarField& right_half);

// Accept iff mean luma reaches brightness_min.
bool brightness_check(const ScalarField& image, const PipelineConfig& cfg);

// Full cascade: (optional brightness gate) -> cycle_filter -> discard_check
// -> ransac_background -> bundle_adjust -> label_motion. `image`, when
// non-null, is the unit-range luma of the reference frame. Rejections are
// reported in the outcome; solver failures propagate as exceptions tagged
// with the failing stage.
BuildOutcome build_supervision(const FlowBundle& bundle, const ScalarField* image,
                               const PipelineConfig& cfg, std::uint64_t seed);

}  // namespace depthsup
