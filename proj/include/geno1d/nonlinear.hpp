#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace geno1d {

//! Parameters of the tanh-path blend. The defaults are the validated
//! structured-mesh settings.
struct GenoParams {
  double C = 20.0;      // path steepness, validated range [10, 20]
  double r = 2.0;       // ultimate-indicator exponent (2 structured, 3 unstructured)
  double r_low = 2.0;   // low-order ENO blend exponent
  double eps = 1e-15;   // division regularizer
  double C0 = 8.0;      // linear-weight boost for the central sub-stencil
};

struct TenoParams {
  int exponent = 7;
  double c_t = 1e-6;  // cut threshold
};

//! Per-interface smoothness record.
struct SmoothnessBundle {
  std::vector<double> is_k;
  double is_high = 0.0;
  double is_low = 0.0;
  double is_tau = 0.0;
  double alpha = 1.0;
  double chi = 1.0;
};

//! Nonlinear weights together with their reference linear weights.
struct WeightVector {
  std::vector<double> w;
  std::vector<double> d;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

//! Tanh(C alpha)/Tanh(C), clamped to [0, 1].
double path_function(double alpha, double C);

//! alpha = 2 a_H / (a_H + a_L) with a_H = 1 + (tau/(IS_H + eps))^r and
//! a_L = 1 + (tau/(IS_L + eps))^r.
double ultimate_alpha(double is_tau, double is_high, double is_low, double r,
                      double eps);

double is_high_structured(std::span<const double> is_k);  // Max
double is_low_structured(std::span<const double> is_k);   // Min

//! Mean of the indicators with Min and Max removed (unstructured variant;
//! requires at least three entries).
double is_low_averaged(std::span<const double> is_k);

//! |(a + c)/2 - b|; the caller binds indices per scheme.
double is_tau_threepoint(double is_a, double is_b, double is_c);

//! ENO-blend weights: w_k proportional to d_k / (IS_k + eps)^r_low.
WeightVector low_order_weights(std::span<const double> is_k,
                               std::span<const double> d_k, double r_low,
                               double eps);

//! chi q_high + (1 - chi) sum w_k p_k.
double geno_blend(double q_high_value, std::span<const double> low_values,
                  const SmoothnessBundle& bundle, const WeightVector& weights);

WeightVector weno_js_weights(std::span<const double> is_k,
                             std::span<const double> d_k, double eps);

WeightVector weno_z_weights(std::span<const double> is_k,
                            std::span<const double> d_k, double tau_z,
                            double eps);

WeightVector teno_weights(std::span<const double> is_k,
                          std::span<const double> d_k, const TenoParams& params,
                          double eps);

//! Min over k of w_k/d_k: the retained fraction of the linear scheme.
double linearity_proportion(const WeightVector& w);

enum class SweepScenario { tau_min, tau_max };
enum class SweepMethod { geno, weno_z, teno };
//! Indicator multiplicity used by the sweep: (1, phi, phi) or (1, 1, phi).
enum class SweepMultiplicity { two_large, one_large };

//! Synthetic smoothness-ratio sweep: per phi, sets IS = (1, phi, phi) (or
//! (1, 1, phi)), binds tau to Min or Max per scenario, and reports the
//! linear-reconstruction proportion chi of the chosen method with d_k = 1/3.
std::vector<std::pair<double, double>> chi_scenario_sweep(
    SweepScenario scenario, std::span<const double> phi_grid, SweepMethod method,
    SweepMultiplicity multiplicity = SweepMultiplicity::two_large,
    const GenoParams& geno = {}, const TenoParams& teno = {});

}  // namespace geno1d
