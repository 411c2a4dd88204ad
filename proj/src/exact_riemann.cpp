#include "geno1d/exact_riemann.hpp"

#include <algorithm>
#include <cmath>

namespace geno1d {

namespace {

struct SideFn {
  double rho, p, c, A, B;

  double f(double pr, double gamma) const {
    if (pr > p) return (pr - p) * std::sqrt(A / (pr + B));  // shock branch
    const double g1 = (gamma - 1.0) / (2.0 * gamma);
    return 2.0 * c / (gamma - 1.0) * (std::pow(pr / p, g1) - 1.0);
  }

  double df(double pr, double gamma) const {
    if (pr > p) {
      const double root = std::sqrt(A / (pr + B));
      return root * (1.0 - 0.5 * (pr - p) / (pr + B));
    }
    const double g1 = (gamma + 1.0) / (2.0 * gamma);
    return std::pow(pr / p, -g1) / (rho * c);
  }
};

SideFn make_side(const PrimitiveState& s, double gamma) {
  SideFn fn;
  fn.rho = s.rho;
  fn.p = s.p;
  fn.c = std::sqrt(gamma * s.p / s.rho);
  fn.A = 2.0 / ((gamma + 1.0) * s.rho);
  fn.B = (gamma - 1.0) / (gamma + 1.0) * s.p;
  return fn;
}

}  // namespace

RiemannSolution solve_riemann(const PrimitiveState& left,
                              const PrimitiveState& right, const GasModel& g) {
  if (!is_admissible(left) || !is_admissible(right))
    throw AdmissibilityError("solve_riemann: non-admissible input state");

  const double gamma = g.gamma;
  const SideFn fl = make_side(left, gamma);
  const SideFn fr = make_side(right, gamma);
  const double du = right.u - left.u;

  if (2.0 * (fl.c + fr.c) / (gamma - 1.0) <= du)
    throw VacuumError("solve_riemann: vacuum formation");

  // two-rarefaction guess, robust across the cases in scope
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((fl.c + fr.c - 0.5 * (gamma - 1.0) * du) /
                          (fl.c / std::pow(left.p, z) + fr.c / std::pow(right.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-14 * std::max(left.p, right.p));

  for (int it = 0; it < 200; ++it) {
    const double fval = fl.f(p, gamma) + fr.f(p, gamma) + du;
    const double dval = fl.df(p, gamma) + fr.df(p, gamma);
    double step = fval / dval;
    if (p - step <= 0.0) step = 0.5 * p;  // keep the iterate positive
    const double pn = p - step;
    const bool done = std::abs(pn - p) <= 1e-14 * pn;
    p = pn;
    if (done) break;
  }

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = gamma;
  sol.p_star = p;
  sol.u_star = 0.5 * (left.u + right.u) + 0.5 * (fr.f(p, gamma) - fl.f(p, gamma));

  const double gm1 = gamma - 1.0;
  const double gp1 = gamma + 1.0;

  sol.left_is_shock = p > left.p;
  if (sol.left_is_shock) {
    const double pratio = p / left.p;
    sol.rho_star_left =
        left.rho * (pratio + gm1 / gp1) / (gm1 / gp1 * pratio + 1.0);
    const double s =
        left.u - fl.c * std::sqrt(gp1 / (2.0 * gamma) * pratio + gm1 / (2.0 * gamma));
    sol.left_head = sol.left_tail = s;
  } else {
    sol.rho_star_left = left.rho * std::pow(p / left.p, 1.0 / gamma);
    const double c_star = fl.c * std::pow(p / left.p, gm1 / (2.0 * gamma));
    sol.left_head = left.u - fl.c;
    sol.left_tail = sol.u_star - c_star;
  }

  sol.right_is_shock = p > right.p;
  if (sol.right_is_shock) {
    const double pratio = p / right.p;
    sol.rho_star_right =
        right.rho * (pratio + gm1 / gp1) / (gm1 / gp1 * pratio + 1.0);
    const double s =
        right.u + fr.c * std::sqrt(gp1 / (2.0 * gamma) * pratio + gm1 / (2.0 * gamma));
    sol.right_head = sol.right_tail = s;
  } else {
    sol.rho_star_right = right.rho * std::pow(p / right.p, 1.0 / gamma);
    const double c_star = fr.c * std::pow(p / right.p, gm1 / (2.0 * gamma));
    sol.right_head = right.u + fr.c;
    sol.right_tail = sol.u_star + c_star;
  }
  return sol;
}

PrimitiveState RiemannSolution::sample(double xi) const {
  const double gm1 = gamma - 1.0;
  const double gp1 = gamma + 1.0;

  if (xi <= u_star) {
    const double cl = std::sqrt(gamma * left.p / left.rho);
    if (left_is_shock) {
      if (xi <= left_head) return left;
      return {rho_star_left, u_star, p_star};
    }
    if (xi <= left_head) return left;
    if (xi >= left_tail) return {rho_star_left, u_star, p_star};
    // inside the left fan
    const double u = (2.0 / gp1) * (cl + 0.5 * gm1 * left.u + xi);
    const double c = (2.0 / gp1) * (cl + 0.5 * gm1 * (left.u - xi));
    const double rho = left.rho * std::pow(c / cl, 2.0 / gm1);
    const double p = left.p * std::pow(c / cl, 2.0 * gamma / gm1);
    return {rho, u, p};
  }

  const double cr = std::sqrt(gamma * right.p / right.rho);
  if (right_is_shock) {
    if (xi >= right_head) return right;
    return {rho_star_right, u_star, p_star};
  }
  if (xi >= right_head) return right;
  if (xi <= right_tail) return {rho_star_right, u_star, p_star};
  const double u = (2.0 / gp1) * (-cr + 0.5 * gm1 * right.u + xi);
  const double c = (2.0 / gp1) * (cr - 0.5 * gm1 * (right.u - xi));
  const double rho = right.rho * std::pow(c / cr, 2.0 / gm1);
  const double p = right.p * std::pow(c / cr, 2.0 * gamma / gm1);
  return {rho, u, p};
}

std::vector<double> RiemannSolution::wave_speeds() const {
  std::vector<double> s = {left_head, left_tail, u_star, right_tail, right_head};
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

PrimitiveState exact_riemann(const PrimitiveState& left,
                             const PrimitiveState& right, const GasModel& g,
                             double x_over_t) {
  return solve_riemann(left, right, g).sample(x_over_t);
}

}  // namespace geno1d
