#include "gpdepth/depth_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gpdepth/errors.hpp"
#include "gpdepth/kernels.hpp"

namespace gpdepth {

DepthMap::DepthMap(int w, int h) : width(w), height(h) {
  if (w < 1 || h < 1) {
    throw std::invalid_argument("DepthMap: dimensions must be >= 1, got " +
                                std::to_string(w) + "x" + std::to_string(h));
  }
  values.assign(static_cast<std::size_t>(w) * h, 0.0);
  valid.assign(static_cast<std::size_t>(w) * h, 0);
}

void DepthMap::set(int u, int v, double d) {
  if (!std::isfinite(d) || d <= 0.0) {
    throw std::invalid_argument("DepthMap::set: depth must be finite > 0, got " +
                                std::to_string(d) + " at (" + std::to_string(u) +
                                "," + std::to_string(v) + ")");
  }
  values[index(u, v)] = d;
  valid[index(u, v)] = 1;
}

void DepthMap::set_invalid(int u, int v) {
  values[index(u, v)] = 0.0;
  valid[index(u, v)] = 0;
}

std::size_t DepthMap::valid_count() const {
  return static_cast<std::size_t>(
      std::count(valid.begin(), valid.end(), std::uint8_t{1}));
}

void DepthMap::check() const {
  if (width < 1 || height < 1)
    throw std::runtime_error("DepthMap: empty dimensions");
  const std::size_t n = static_cast<std::size_t>(width) * height;
  if (values.size() != n || valid.size() != n)
    throw std::runtime_error("DepthMap: storage does not match dimensions");
  for (std::size_t i = 0; i < n; ++i) {
    if (valid[i]) {
      if (!std::isfinite(values[i]) || values[i] <= 0.0)
        throw std::runtime_error("DepthMap: valid pixel with non-positive depth");
    } else if (values[i] != 0.0) {
      throw std::runtime_error("DepthMap: invalid pixel without zero sentinel");
    }
  }
}

void SparsePointSet::check() const {
  std::vector<std::uint64_t> seen;
  seen.reserve(points.size());
  for (const auto& p : points) {
    if (p.u < 0 || p.u >= frame_width || p.v < 0 || p.v >= frame_height)
      throw std::runtime_error("SparsePointSet: point outside frame");
    if (!std::isfinite(p.depth) || p.depth <= 0.0)
      throw std::runtime_error("SparsePointSet: non-positive depth");
    seen.push_back((static_cast<std::uint64_t>(p.v) << 32) |
                   static_cast<std::uint32_t>(p.u));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::runtime_error("SparsePointSet: duplicate pixel coordinate");
}

DepthMap downsample_closest(const DepthMap& map, int factor) {
  if (factor < 1)
    throw std::invalid_argument("downsample_closest: factor must be >= 1");
  if (factor == 1) return map;

  const int out_w = (map.width + factor - 1) / factor;
  const int out_h = (map.height + factor - 1) / factor;
  DepthMap out(out_w, out_h);
  for (int ov = 0; ov < out_h; ++ov) {
    for (int ou = 0; ou < out_w; ++ou) {
      double closest = std::numeric_limits<double>::infinity();
      bool any = false;
      const int u0 = ou * factor, v0 = ov * factor;
      const int u1 = std::min(u0 + factor, map.width);
      const int v1 = std::min(v0 + factor, map.height);
      for (int v = v0; v < v1; ++v) {
        for (int u = u0; u < u1; ++u) {
          if (map.is_valid(u, v)) {
            closest = std::min(closest, map.at(u, v));
            any = true;
          }
        }
      }
      if (any) out.set(ou, ov, closest);
    }
  }
  return out;
}

SparsePointSet sparse_from_map(const DepthMap& map) {
  SparsePointSet set;
  set.frame_width = map.width;
  set.frame_height = map.height;
  for (int v = 0; v < map.height; ++v)
    for (int u = 0; u < map.width; ++u)
      if (map.is_valid(u, v)) set.points.push_back({u, v, map.at(u, v)});
  return set;
}

TrainingSet build_training_set(const DepthMap& dense, const SparsePointSet& sparse,
                               const GpHyperparams& hp) {
  hp.validate();
  if (!sparse.points.empty() && (sparse.frame_width != dense.width ||
                                 sparse.frame_height != dense.height)) {
    throw InputError("build_training_set: sparse frame " +
                     std::to_string(sparse.frame_width) + "x" +
                     std::to_string(sparse.frame_height) +
                     " does not match dense map " + std::to_string(dense.width) +
                     "x" + std::to_string(dense.height));
  }

  const std::size_t n = dense.valid_count() + sparse.size();
  TrainingSet train;
  train.inputs.reserve(n);
  train.outputs.resize(static_cast<Eigen::Index>(n));
  train.noise.resize(static_cast<Eigen::Index>(n));

  Eigen::Index row = 0;
  for (int v = 0; v < dense.height; ++v) {
    for (int u = 0; u < dense.width; ++u) {
      if (!dense.is_valid(u, v)) continue;
      train.inputs.push_back({u + 0.5, v + 0.5});
      train.outputs[row] = dense.at(u, v);
      train.noise[row] = hp.sigma_dl;
      ++row;
    }
  }
  for (const auto& p : sparse.points) {
    train.inputs.push_back({p.u + 0.5, p.v + 0.5});
    train.outputs[row] = p.depth;
    train.noise[row] = hp.sigma_meas;
    ++row;
  }
  return train;
}

}  // namespace gpdepth
