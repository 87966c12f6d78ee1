#include "krigbound/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "krigbound/bessel.hpp"

namespace krigbound {

namespace {

// Below this lag the Matern value is taken as its analytic limit 1,
// sidestepping the 0 * inf form of z^nu K_nu(z).
constexpr double kZeroLag = 1e-12;

bool is_half_integer(double nu) {
  const double two_nu = 2.0 * nu;
  const double rounded = std::round(two_nu);
  return std::fabs(two_nu - rounded) < 1e-12 &&
         static_cast<long long>(rounded) % 2 != 0;
}

// Matern correlation for nu = p + 1/2:
//   e^{-z} (p!/(2p)!) sum_{k=0..p} (p+k)!/(k!(p-k)!) (2z)^{p-k}.
double matern_half_integer(int p, double z) {
  double term = std::pow(2.0 * z, p);  // k = 0
  double sum = term;
  for (int k = 1; k <= p; ++k) {
    term *= static_cast<double>((p + k) * (p - k + 1)) / (k * (2.0 * z));
    sum += term;
  }
  double prefactor = 1.0;
  for (int j = p + 1; j <= 2 * p; ++j) prefactor /= j;
  return std::exp(-z) * prefactor * sum;
}

double matern_radial(double nu, double z) {
  if (is_half_integer(nu)) {
    return matern_half_integer(static_cast<int>(std::lround(nu - 0.5)), z);
  }
  const double scale =
      std::exp(-std::lgamma(nu) - (nu - 1.0) * std::numbers::ln2);
  return scale * std::pow(z, nu) * bessel_k(nu, z);
}

}  // namespace

Kernel Kernel::gaussian(double phi, int dim) {
  Kernel k{KernelFamily::Gaussian, phi, std::nullopt, dim};
  k.validate();
  return k;
}

Kernel Kernel::matern(double nu, double phi, int dim) {
  Kernel k{KernelFamily::Matern, phi, nu, dim};
  k.validate();
  return k;
}

void Kernel::validate() const {
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    throw InvalidInputError("Kernel: phi must be positive and finite");
  }
  if (dim < 1) {
    throw InvalidInputError("Kernel: dim must be >= 1");
  }
  if (family == KernelFamily::Matern) {
    if (!nu.has_value() || !(*nu > 0.0) || !std::isfinite(*nu)) {
      throw InvalidInputError("Kernel: Matern requires finite nu > 0");
    }
  } else if (nu.has_value()) {
    throw InvalidInputError("Kernel: nu is only meaningful for Matern");
  }
}

double eval_radial(const Kernel& kernel, double r) {
  if (!std::isfinite(r)) {
    throw InvalidInputError("eval: non-finite lag");
  }
  r = std::fabs(r);
  if (r < kZeroLag) return 1.0;
  if (kernel.family == KernelFamily::Gaussian) {
    return std::exp(-kernel.phi * r * r);
  }
  const double nu = *kernel.nu;
  return matern_radial(nu, 2.0 * std::sqrt(nu) * kernel.phi * r);
}

double eval(const Kernel& kernel, const Eigen::Ref<const Eigen::VectorXd>& lag) {
  if (lag.size() != kernel.dim) {
    throw InvalidInputError("eval: lag dimension does not match kernel dim");
  }
  if (!lag.allFinite()) {
    throw InvalidInputError("eval: non-finite lag");
  }
  return eval_radial(kernel, lag.norm());
}

double spectral_density(const Kernel& kernel, double omega_norm) {
  if (!(omega_norm >= 0.0) || !std::isfinite(omega_norm)) {
    throw InvalidInputError("spectral_density: requires finite omega_norm >= 0");
  }
  const double d = kernel.dim;
  if (kernel.family == KernelFamily::Gaussian) {
    return std::pow(M_PI / kernel.phi, 2.0 / d) *
           std::exp(-omega_norm * omega_norm / (4.0 * kernel.phi));
  }
  const double nu = *kernel.nu;
  const double four_nu_phi2 = 4.0 * nu * kernel.phi * kernel.phi;
  const double log_value = d * std::numbers::ln2 + 0.5 * d * std::log(M_PI) +
                           std::lgamma(nu + 0.5 * d) - std::lgamma(nu) +
                           nu * std::log(four_nu_phi2) -
                           (nu + 0.5 * d) *
                               std::log(four_nu_phi2 + omega_norm * omega_norm);
  return std::exp(log_value);
}

std::vector<double> default_omega_grid() {
  std::vector<double> grid;
  const int count = 161;  // 1e-2 .. 1e4, ~27 points per decade
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    grid.push_back(std::pow(10.0, -2.0 + 6.0 * t));
  }
  return grid;
}

Condition1Diagnostic condition1_ratio(const Kernel& true_kernel,
                                      const Kernel& imposed_kernel,
                                      const std::vector<double>& omega_grid) {
  if (true_kernel.dim != imposed_kernel.dim) {
    throw InvalidInputError("condition1_ratio: kernels must share dim");
  }
  if (omega_grid.size() < 4) {
    throw InvalidInputError("condition1_ratio: grid needs at least 4 points");
  }
  for (std::size_t i = 1; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i] > omega_grid[i - 1])) {
      throw InvalidInputError("condition1_ratio: grid must be strictly increasing");
    }
  }

  Condition1Diagnostic diag;
  std::vector<double> log_omega, log_ratio;
  log_omega.reserve(omega_grid.size());
  log_ratio.reserve(omega_grid.size());
  for (const double omega : omega_grid) {
    const double numerator = spectral_density(true_kernel, omega);
    const double denominator = spectral_density(imposed_kernel, omega);
    if (denominator <= 0.0) {
      // Imposed density underflowed while scanning upward: the ratio has
      // left double range, which we report as divergence with the last
      // finite supremum.
      if (numerator > 0.0) {
        diag.trend = RatioTrend::Diverging;
        return diag;
      }
      continue;  // both underflowed; nothing to measure here
    }
    const double ratio = numerator / denominator;
    diag.max_ratio = std::max(diag.max_ratio, ratio);
    if (ratio > 0.0 && std::isfinite(ratio)) {
      log_omega.push_back(std::log(omega));
      log_ratio.push_back(std::log(ratio));
    }
  }

  // Slope of log ratio vs log omega over the top fifth of the usable grid.
  // A ratio still climbing there means the supremum is not attained on any
  // finite grid.
  const std::size_t usable = log_omega.size();
  if (usable >= 4) {
    const std::size_t window = std::max<std::size_t>(4, usable / 5);
    const std::size_t start = usable - window;
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = start; i < usable; ++i) {
      mean_x += log_omega[i];
      mean_y += log_ratio[i];
    }
    mean_x /= window;
    mean_y /= window;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = start; i < usable; ++i) {
      sxx += (log_omega[i] - mean_x) * (log_omega[i] - mean_x);
      sxy += (log_omega[i] - mean_x) * (log_ratio[i] - mean_y);
    }
    constexpr double kSlopeTolerance = 0.05;
    if (sxx > 0.0 && sxy / sxx > kSlopeTolerance) {
      diag.trend = RatioTrend::Diverging;
    }
  }
  return diag;
}

Eigen::MatrixXd correlation_matrix(const Kernel& kernel,
                                   const Eigen::Ref<const Eigen::MatrixXd>& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double value =
          eval_radial(kernel, (points.row(i) - points.row(j)).norm());
      k(i, j) = value;
      k(j, i) = value;
    }
  }
  return k;
}

Eigen::MatrixXd cross_correlation(const Kernel& kernel,
                                  const Eigen::Ref<const Eigen::MatrixXd>& points_a,
                                  const Eigen::Ref<const Eigen::MatrixXd>& points_b) {
  if (points_a.cols() != points_b.cols()) {
    throw InvalidInputError("cross_correlation: dimension mismatch");
  }
  Eigen::MatrixXd r(points_a.rows(), points_b.rows());
  for (Eigen::Index i = 0; i < points_a.rows(); ++i) {
    for (Eigen::Index j = 0; j < points_b.rows(); ++j) {
      r(i, j) = eval_radial(kernel, (points_a.row(i) - points_b.row(j)).norm());
    }
  }
  return r;
}

}  // namespace krigbound
