#pragma once

#include <span>
#include <string>

#include <Eigen/Core>

#include "gpdepth/depth_map.hpp"

namespace gpdepth {

enum class MaternNu { half, three_halves, five_halves };
enum class KernelStructure { product, isotropic };

MaternNu parse_nu(const std::string& s);          // "1/2", "0.5", "3/2", ...
KernelStructure parse_structure(const std::string& s);
std::string to_string(MaternNu nu);
std::string to_string(KernelStructure s);

/// Shared hyperparameter model for both regression paths. Noise values are
/// standard deviations in meters; the GP noise matrix carries their squares.
struct GpHyperparams {
  double length_scale = 1.5;   // pixels
  double sigma_dl = 0.05;      // dense-modality noise std, meters
  double sigma_meas = 0.001;   // sparse-modality noise std, meters
  double output_scale = 1.0;   // kernel variance at zero distance, meters^2
  MaternNu nu = MaternNu::five_halves;
  KernelStructure structure = KernelStructure::product;

  /// Throws InputError unless all scales are positive and
  /// sigma_meas <= sigma_dl (the sparse modality is the precise one).
  void validate() const;
};

/// Stationary Matern covariance along one axis or radius.
struct KernelSpec {
  MaternNu nu = MaternNu::five_halves;
  double length_scale = 1.5;   // pixels
  double output_scale = 1.0;   // meters^2

  static KernelSpec from(const GpHyperparams& hp) {
    return {hp.nu, hp.length_scale, hp.output_scale};
  }
};

/// Normalized Matern correlation m_nu(t), m_nu(0) = 1:
///   nu = 1/2: exp(-t)
///   nu = 3/2: (1 + sqrt(3) t) exp(-sqrt(3) t)
///   nu = 5/2: (1 + sqrt(5) t + 5 t^2 / 3) exp(-sqrt(5) t)
double matern_correlation(double t, MaternNu nu);

/// output_scale * m_nu(r / length_scale). Throws on negative r.
double matern_1d(double r, const KernelSpec& spec);

/// Two-dimensional stationary kernel.
///   product:   output_scale * m(|du|/l) * m(|dv|/l)  (Kronecker-factorable)
///   isotropic: output_scale * m(sqrt(du^2 + dv^2)/l)
double kernel_2d(PixelCoord a, PixelCoord b, const KernelSpec& spec,
                 KernelStructure structure);

/// Dense cross-covariance matrix, entry (i,j) = kernel_2d(xs[i], ys[j]).
Eigen::MatrixXd kernel_matrix(std::span<const PixelCoord> xs,
                              std::span<const PixelCoord> ys,
                              const KernelSpec& spec, KernelStructure structure);

}  // namespace gpdepth
