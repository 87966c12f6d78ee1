#include "krigbound/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace krigbound {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 10000;

// Chebyshev fits for the Temme gamma combinations, from GSL's
// bessel_temme.c (Brian Gough), themselves derived from Temme (1975).
//
//   g1(nu) = [1/Gamma(1-nu) - 1/Gamma(1+nu)] / (2 nu)
//   g2(nu) = [1/Gamma(1-nu) + 1/Gamma(1+nu)] / 2
//
// Both are even in nu; the fits cover |nu| <= 1/2 via x = 4|nu| - 1.
constexpr double kG1Coeffs[] = {
    -1.14516408366268311786898152867,
    0.00636085311347084238122955495,
    0.00186245193007206848934643657,
    0.000152833085873453507081227824,
    0.000017017464011802038795324732,
    -6.4597502923347254354668326451e-07,
    -5.1819848432519380894104312968e-08,
    4.5189092894858183051123180797e-10,
    3.2433227371020873043666259180e-11,
    6.8309434024947522875432400828e-13,
    2.8353502755172101513119628130e-14,
    -7.9883905769323592875638087541e-16,
    -3.3726677300771949833341213457e-17,
    -3.6586334809210520744054437104e-20,
};

constexpr double kG2Coeffs[] = {
    1.882645524949671835019616975350,
    -0.077490658396167518329547945212,
    -0.018256714847324929419579340950,
    0.0006338030209074895795923971731,
    0.0000762290543508729021194461175,
    -9.5501647561720443519853993526e-07,
    -8.8927268107886351912431512955e-08,
    -1.9521334772319613740511880132e-09,
    -9.4003052735885162111769579771e-11,
    4.6875133849532393179290879101e-12,
    2.2658535746925759582447545145e-13,
    -1.1725509698488015111878735251e-15,
    -7.0441338200245222530843155877e-17,
    -2.4377878310107693650659740228e-18,
    -7.5225243218253901727164675011e-20,
};

double cheb_eval(const double* coeffs, int order, double x) {
  double d = 0.0;
  double dd = 0.0;
  const double y2 = 2.0 * x;
  for (int j = order; j >= 1; --j) {
    const double temp = d;
    d = y2 * d - dd + coeffs[j];
    dd = temp;
  }
  return x * d - dd + 0.5 * coeffs[0];
}

// Gamma(1 +/- mu) and the g1/g2 combinations for |mu| <= 1/2.
void temme_gamma(double mu, double& gamma_1_plus, double& gamma_1_minus,
                 double& g1, double& g2) {
  const double x = 4.0 * std::fabs(mu) - 1.0;
  g1 = cheb_eval(kG1Coeffs, 13, x);
  g2 = cheb_eval(kG2Coeffs, 14, x);
  gamma_1_minus = 1.0 / (g2 + mu * g1);
  gamma_1_plus = 1.0 / (g2 - mu * g1);
}

// K_mu(z) and K_{mu+1}(z) by Temme's series; requires |mu| <= 1/2, z <= 2.
void k_temme_series(double mu, double z, double& k_mu, double& k_mu1) {
  const double half_z = 0.5 * z;
  const double ln_half_z = std::log(half_z);
  const double half_z_mu = std::exp(mu * ln_half_z);
  const double pi_mu = M_PI * mu;
  const double sigma = -mu * ln_half_z;
  const double sinrat = std::fabs(pi_mu) < kEps ? 1.0 : pi_mu / std::sin(pi_mu);
  const double sinhrat = std::fabs(sigma) < kEps ? 1.0 : std::sinh(sigma) / sigma;

  double gamma_1_plus, gamma_1_minus, g1, g2;
  temme_gamma(mu, gamma_1_plus, gamma_1_minus, g1, g2);

  double fk = sinrat * (std::cosh(sigma) * g1 - sinhrat * ln_half_z * g2);
  double pk = 0.5 / half_z_mu * gamma_1_plus;
  double qk = 0.5 * half_z_mu * gamma_1_minus;
  double hk = pk;
  double ck = 1.0;
  double sum0 = fk;
  double sum1 = hk;
  int k = 0;
  while (k < kMaxIter) {
    ++k;
    fk = (k * fk + pk + qk) / (k * k - mu * mu);
    ck *= half_z * half_z / k;
    pk /= (k - mu);
    qk /= (k + mu);
    hk = -k * fk + pk;
    const double del0 = ck * fk;
    sum0 += del0;
    sum1 += ck * hk;
    if (std::fabs(del0) < 0.5 * std::fabs(sum0) * kEps) break;
  }
  k_mu = sum0;
  k_mu1 = sum1 * 2.0 / z;
}

// K_mu(z) and K_{mu+1}(z) by Steed's continued fraction (CF2); |mu| <= 1/2,
// z > 2.
void k_steed_cf2(double mu, double z, double& k_mu, double& k_mu1) {
  double bi = 2.0 * (1.0 + z);
  double di = 1.0 / bi;
  double delh = di;
  double h = di;
  double qi = 0.0;
  double qip1 = 1.0;
  double ai = -(0.25 - mu * mu);
  const double a1 = ai;
  double ci = -ai;
  double bigq = -ai;
  double s = 1.0 + bigq * delh;
  for (int i = 2; i <= kMaxIter; ++i) {
    ai -= 2.0 * (i - 1);
    ci = -ai * ci / i;
    const double tmp = (qi - bi * qip1) / ai;
    qi = qip1;
    qip1 = tmp;
    bigq += ci * qip1;
    bi += 2.0;
    di = 1.0 / (bi + ai * di);
    delh = (bi * di - 1.0) * delh;
    h += delh;
    const double dels = bigq * delh;
    s += dels;
    if (std::fabs(dels / s) < kEps) break;
  }
  h *= -a1;
  k_mu = std::sqrt(M_PI / (2.0 * z)) * std::exp(-z) / s;
  k_mu1 = k_mu * (mu + z + 0.5 - h) / z;
}

}  // namespace

double bessel_k(double nu, double z) {
  if (!std::isfinite(nu) || !std::isfinite(z)) {
    throw std::domain_error("bessel_k: non-finite argument");
  }
  if (z <= 0.0) {
    throw std::domain_error("bessel_k: requires z > 0");
  }
  nu = std::fabs(nu);  // K is even in the order

  const int steps = static_cast<int>(nu + 0.5);
  const double mu = nu - steps;  // in [-1/2, 1/2]

  double k_mu, k_mu1;
  if (z <= 2.0) {
    k_temme_series(mu, z, k_mu, k_mu1);
  } else {
    k_steed_cf2(mu, z, k_mu, k_mu1);
  }

  // March the order up from mu with the stable forward recurrence
  // K_{m+1}(z) = K_{m-1}(z) + (2m/z) K_m(z).
  for (int i = 1; i <= steps; ++i) {
    const double k_next = (mu + i) * (2.0 / z) * k_mu1 + k_mu;
    k_mu = k_mu1;
    k_mu1 = k_next;
  }

  if (!std::isfinite(k_mu)) {
    throw std::overflow_error("bessel_k: result exceeds double range");
  }
  return k_mu;
}

}  // namespace krigbound
