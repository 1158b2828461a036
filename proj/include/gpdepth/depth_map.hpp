#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace gpdepth {

struct GpHyperparams;

/// A location on the image plane in pixel units. Regression inputs are pixel
/// centers, i.e. (u + 0.5, v + 0.5) with u along width and v along height, so
/// kernel length scales are directly comparable to inter-pixel spacing.
struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

/// Dense rectangular depth grid in meters with an explicit validity mask.
/// Invalid pixels carry the sentinel depth 0; the mask is authoritative.
/// Valid depths are finite and strictly positive.
struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> values;        // row-major, length width*height
  std::vector<std::uint8_t> valid;   // same shape, 0 or 1

  DepthMap() = default;
  DepthMap(int w, int h);  // all pixels invalid

  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(v) * width + u;
  }
  double at(int u, int v) const { return values[index(u, v)]; }
  bool is_valid(int u, int v) const { return valid[index(u, v)] != 0; }

  /// Marks (u,v) valid with the given depth. Throws if d is not finite > 0.
  void set(int u, int v, double d);
  void set_invalid(int u, int v);

  std::size_t pixel_count() const { return values.size(); }
  std::size_t valid_count() const;
  bool in_bounds(int u, int v) const {
    return u >= 0 && u < width && v >= 0 && v < height;
  }

  /// Checks the structural invariants (shape, mask/sentinel consistency,
  /// positive finite depths). Throws std::runtime_error on violation.
  void check() const;
};

/// Sparse accurate range measurements on the image plane.
struct SparsePoint {
  int u = 0;
  int v = 0;
  double depth = 0.0;  // meters, finite > 0
};

struct SparsePointSet {
  std::vector<SparsePoint> points;
  int frame_width = 0;   // image plane the coordinates live in
  int frame_height = 0;

  std::size_t size() const { return points.size(); }
  void check() const;  // bounds, positivity, per-pixel uniqueness
};

/// GP training data: one row per observation. Dense rows come first with
/// noise sigma_dl, sparse rows follow with sigma_meas; a pixel observed by
/// both modalities contributes two rows and the GP weighs them by noise.
struct TrainingSet {
  std::vector<PixelCoord> inputs;
  Eigen::VectorXd outputs;  // depths, meters
  Eigen::VectorXd noise;    // per-row observation noise std, meters

  std::size_t size() const { return inputs.size(); }
};

/// Occlusion-aware downsampling: each output pixel takes the minimum valid
/// depth of its factor x factor source block (the closest surface wins, which
/// suppresses background bleed-through of projected range points). Output is
/// ceil(width/factor) x ceil(height/factor); a block with no valid source
/// pixel yields an invalid output pixel.
DepthMap downsample_closest(const DepthMap& map, int factor);

/// One point per valid pixel, depth preserved; frame = map dimensions.
SparsePointSet sparse_from_map(const DepthMap& map);

/// Assembles the regression training set from both modalities. The sparse
/// frame must match the dense dimensions. Coordinates are pixel centers.
TrainingSet build_training_set(const DepthMap& dense, const SparsePointSet& sparse,
                               const GpHyperparams& hp);

}  // namespace gpdepth
