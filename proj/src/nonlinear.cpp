#include "geno1d/nonlinear.hpp"

#include <algorithm>
#include <cmath>

namespace geno1d {

double path_function(double alpha, double C) {
  const double chi = std::tanh(C * alpha) / std::tanh(C);
  return std::clamp(chi, 0.0, 1.0);
}

double ultimate_alpha(double is_tau, double is_high, double is_low, double r,
                      double eps) {
  const double a_high = 1.0 + std::pow(is_tau / (is_high + eps), r);
  const double a_low = 1.0 + std::pow(is_tau / (is_low + eps), r);
  return 2.0 * a_high / (a_high + a_low);
}

double is_high_structured(std::span<const double> is_k) {
  if (is_k.empty()) throw UsageError("is_high_structured: empty indicator list");
  return *std::max_element(is_k.begin(), is_k.end());
}

double is_low_structured(std::span<const double> is_k) {
  if (is_k.empty()) throw UsageError("is_low_structured: empty indicator list");
  return *std::min_element(is_k.begin(), is_k.end());
}

double is_low_averaged(std::span<const double> is_k) {
  if (is_k.size() < 3)
    throw UsageError("is_low_averaged: needs at least three indicators");
  double sum = 0.0, lo = is_k[0], hi = is_k[0];
  for (double v : is_k) {
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (sum - lo - hi) / static_cast<double>(is_k.size() - 2);
}

double is_tau_threepoint(double is_a, double is_b, double is_c) {
  return std::abs(0.5 * (is_a + is_c) - is_b);
}

WeightVector low_order_weights(std::span<const double> is_k,
                               std::span<const double> d_k, double r_low,
                               double eps) {
  if (is_k.size() != d_k.size())
    throw UsageError("low_order_weights: size mismatch");
  WeightVector wv;
  wv.d.assign(d_k.begin(), d_k.end());
  wv.w.resize(is_k.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < is_k.size(); ++k) {
    wv.w[k] = d_k[k] / std::pow(is_k[k] + eps, r_low);
    sum += wv.w[k];
  }
  for (double& w : wv.w) w /= sum;
  return wv;
}

double geno_blend(double q_high_value, std::span<const double> low_values,
                  const SmoothnessBundle& bundle, const WeightVector& weights) {
  double q_low = 0.0;
  for (std::size_t k = 0; k < low_values.size(); ++k)
    q_low += weights.w[k] * low_values[k];
  return bundle.chi * q_high_value + (1.0 - bundle.chi) * q_low;
}

WeightVector weno_js_weights(std::span<const double> is_k,
                             std::span<const double> d_k, double eps) {
  WeightVector wv;
  wv.d.assign(d_k.begin(), d_k.end());
  wv.w.resize(is_k.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < is_k.size(); ++k) {
    const double denom = is_k[k] + eps;
    wv.w[k] = d_k[k] / (denom * denom);
    sum += wv.w[k];
  }
  for (double& w : wv.w) w /= sum;
  return wv;
}

WeightVector weno_z_weights(std::span<const double> is_k,
                            std::span<const double> d_k, double tau_z,
                            double eps) {
  WeightVector wv;
  wv.d.assign(d_k.begin(), d_k.end());
  wv.w.resize(is_k.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < is_k.size(); ++k) {
    wv.w[k] = d_k[k] * (1.0 + tau_z / (is_k[k] + eps));
    sum += wv.w[k];
  }
  for (double& w : wv.w) w /= sum;
  return wv;
}

WeightVector teno_weights(std::span<const double> is_k,
                          std::span<const double> d_k, const TenoParams& params,
                          double eps) {
  const std::size_t k0 = is_k.size();
  std::vector<double> gamma(k0);
  double gamma_sum = 0.0;
  for (std::size_t k = 0; k < k0; ++k) {
    gamma[k] = std::pow(1.0 / (is_k[k] + eps), params.exponent);
    gamma_sum += gamma[k];
  }

  WeightVector wv;
  wv.d.assign(d_k.begin(), d_k.end());
  wv.w.resize(k0);
  double sum = 0.0;
  for (std::size_t k = 0; k < k0; ++k) {
    const bool keep = gamma[k] / gamma_sum > params.c_t;
    wv.w[k] = keep ? d_k[k] : 0.0;
    sum += wv.w[k];
  }
  if (sum <= 0.0)
    throw std::logic_error("teno_weights: every candidate was cut");
  for (double& w : wv.w) w /= sum;
  return wv;
}

double linearity_proportion(const WeightVector& wv) {
  double chi = wv.w[0] / wv.d[0];
  for (std::size_t k = 1; k < wv.w.size(); ++k)
    chi = std::min(chi, wv.w[k] / wv.d[k]);
  return chi;
}

std::vector<std::pair<double, double>> chi_scenario_sweep(
    SweepScenario scenario, std::span<const double> phi_grid, SweepMethod method,
    SweepMultiplicity multiplicity, const GenoParams& geno, const TenoParams& teno) {
  std::vector<std::pair<double, double>> rows;
  rows.reserve(phi_grid.size());
  const std::vector<double> d = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  for (double phi : phi_grid) {
    if (phi < 1.0) throw UsageError("chi_scenario_sweep: phi must be >= 1");
    const std::vector<double> is =
        multiplicity == SweepMultiplicity::two_large
            ? std::vector<double>{1.0, phi, phi}
            : std::vector<double>{1.0, 1.0, phi};
    const double tau = scenario == SweepScenario::tau_min ? 1.0 : phi;

    double chi = 1.0;
    switch (method) {
      case SweepMethod::geno: {
        const double alpha =
            ultimate_alpha(tau, is_high_structured(is), is_low_structured(is),
                           geno.r, geno.eps);
        chi = path_function(alpha, geno.C);
        break;
      }
      case SweepMethod::weno_z:
        chi = linearity_proportion(weno_z_weights(is, d, tau, geno.eps));
        break;
      case SweepMethod::teno:
        chi = linearity_proportion(teno_weights(is, d, teno, geno.eps));
        break;
    }
    rows.emplace_back(phi, chi);
  }
  return rows;
}

}  // namespace geno1d
