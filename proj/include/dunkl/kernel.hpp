#pragma once

#include "dunkl/dunkl_context.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CkMode { automatic, closed_form, quadrature };

struct NumericEvalConfig {
  /// Target for the reported error bound; relative to |K| unless `relative` is false.
  double tolerance = 1e-12;
  bool relative = true;
  /// Highest homogeneous degree summed before giving up.
  unsigned max_degree = 200;
  CkMode c_k_mode = CkMode::automatic;

  void validate() const;
};

/// Value of K (or of a kernel built from K) with a rigorous bound on
/// |value - exact|. `imag` is nonzero only on the imaginary-argument path.
struct KernelValue {
  double value = 0.0;
  double imag = 0.0;
  double error_bound = 0.0;
  unsigned degree = 0;  // last homogeneous degree summed
};

/// K(x, y) = sum_n u_n(x, y), u_n = sum_{|nu| = n} m_nu(x) y^nu / nu!, summed
/// degree by degree in 256-bit floating point. Each u_n comes from a linear
/// solve over the orbit W x (see kernel_blocks). The tail after degree n is
/// bounded by (|x||y|)^{n+1}/(n+1)! / (1 - |x||y|/(n+2)).
/// Throws CapExceededError if the bound cannot reach the tolerance.
KernelValue kernel_eval(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                        const NumericEvalConfig& cfg = {});

/// K(i x, y); same series with the degree-n block multiplied by i^n.
KernelValue kernel_eval_imaginary(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                  const NumericEvalConfig& cfg = {});

/// The homogeneous blocks u_n for n <= max_degree, from the recursion
/// u_n = (n + sum k(alpha)(1 - sigma_alpha))^{-1} (<., y> u_{n-1}) evaluated
/// on the orbit of x. Cost per degree is O(|W|^3), independent of n.
std::vector<double> kernel_blocks(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                  unsigned max_degree);

/// The same blocks summed directly from the exact moment functions m_nu.
/// Needs the degree-n intertwiner, so only practical for small degrees.
std::vector<double> kernel_blocks_exact(const DunklContext& ctx, std::span<const double> x, std::span<const double> y,
                                        unsigned max_degree);

/// Rank-one closed form j_{k-1/2}(izw) + zw/(2k+1) j_{k+1/2}(izw), with the
/// normalized Bessel series summed in 256-bit floating point until the
/// geometric tail bound is below 2^-200 of the partial sum.
double kernel_z2_closed(double k, double z, double w);

/// c_k = (integral of exp(-|x|^2) w_k(x) dx)^{-1}. Closed form for Z2^N,
/// polar-coordinate quadrature (ambient dimension <= 3) otherwise.
double c_k_constant(const DunklContext& ctx, const NumericEvalConfig& cfg = {});

/// Gamma_k(x, y, t) = c_k (4t)^{-gamma - N/2} exp(-(|x|^2 + |y|^2)/4t) K(x/sqrt(2t), y/sqrt(2t)).
KernelValue heat_kernel_eval(const DunklContext& ctx, std::span<const double> x, std::span<const double> y, double t,
                             const NumericEvalConfig& cfg = {});

/// theta_t(x, y) = exp(-|x|^2/4t) K(x, y/2t), the density of P_t(x, .) against P_t(0, .).
KernelValue density_theta(const DunklContext& ctx, double t, std::span<const double> x, std::span<const double> y,
                          const NumericEvalConfig& cfg = {});

struct KernelSample {
  std::vector<double> x;
  std::vector<double> y;
};

struct BoundCheckReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  double max_imaginary_modulus = 0.0;  // max |K(ix, y)|
  double max_invariance_defect = 0.0;  // max |K(gx, gy) - K(x, y)| / K(x, y)
  double max_symmetry_defect = 0.0;
  bool ok() const { return violations.empty(); }
};

/// Checks positivity, |K(ix, y)| <= 1, symmetry, W-invariance, the scaling
/// rule K(lx, y) = K(x, ly) and the per-degree block bound on every sample.
BoundCheckReport kernel_bound_checks(const DunklContext& ctx, std::span<const KernelSample> samples,
                                     const NumericEvalConfig& cfg = {});

}  // namespace dunkl
