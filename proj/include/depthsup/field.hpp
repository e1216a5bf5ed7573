#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace depthsup {

// Row-major 2D grid. (x, y) addresses column x of row y; the origin is the
// top-left pixel center, x grows right, y grows down.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, const T& fill = T{})
      : width_(width),
        height_(height),
        data_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& at(int x, int y) { return data_[flat(x, y)]; }
  const T& at(int x, int y) const { return data_[flat(x, y)]; }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  template <typename U>
  bool same_shape(const Grid<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  std::size_t flat(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  bool operator==(const Grid& other) const {
    return width_ == other.width_ && data_ == other.data_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using ScalarField = Grid<double>;
using VectorField = Grid<Eigen::Vector2d>;
using Mask = Grid<std::uint8_t>;
using OcclusionMask = Mask;

// Scalar grid plus a validity mask of the same shape.
struct MaskedField {
  ScalarField values;
  Mask valid;

  MaskedField() = default;
  MaskedField(int width, int height, double fill = 0.0, bool is_valid = true)
      : values(width, height, fill),
        valid(width, height, is_valid ? std::uint8_t{1} : std::uint8_t{0}) {}

  int width() const { return values.width(); }
  int height() const { return values.height(); }
  bool is_valid(int x, int y) const { return valid.at(x, y) != 0; }
  bool same_shape(const MaskedField& other) const { return values.same_shape(other.values); }
};

// Per-pixel 3D points plus validity.
struct PointMap {
  Grid<Eigen::Vector3d> points;
  Mask valid;

  PointMap() = default;
  PointMap(int width, int height)
      : points(width, height, Eigen::Vector3d::Zero()), valid(width, height, 1) {}

  int width() const { return points.width(); }
  int height() const { return points.height(); }
  bool is_valid(int x, int y) const { return valid.at(x, y) != 0; }
};

// Bilinear lookup at a continuous position. The floor cell is clamped so a
// query on the far edge (x == width-1) stays well defined; callers are
// responsible for bounds checks beyond that.
Eigen::Vector2d bilinear_sample(const VectorField& field, double x, double y);

}  // namespace depthsup
