#pragma once

#include <vector>

#include "geno1d/euler.hpp"

namespace geno1d {

class VacuumError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Star-region values and wave speeds of the exact Riemann solution.
struct RiemannSolution {
  PrimitiveState left;
  PrimitiveState right;
  double gamma = 1.4;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_left = 0.0;
  double rho_star_right = 0.0;
  // wave speeds: for a rarefaction head/tail differ, for a shock they agree
  double left_head = 0.0;
  double left_tail = 0.0;
  double right_head = 0.0;
  double right_tail = 0.0;
  bool left_is_shock = false;
  bool right_is_shock = false;

  //! Self-similar state along the ray x/t = xi.
  PrimitiveState sample(double xi) const;

  //! Ray speeds at which the solution is non-smooth (kinks and jumps),
  //! sorted ascending; used to split quadrature intervals.
  std::vector<double> wave_speeds() const;
};

//! Solve the Riemann problem exactly (Newton iteration on the pressure
//! function to 1e-12 relative). Throws VacuumError if vacuum forms.
RiemannSolution solve_riemann(const PrimitiveState& left,
                              const PrimitiveState& right, const GasModel& g);

//! Convenience sampler matching the benchmark-oracle signature.
PrimitiveState exact_riemann(const PrimitiveState& left,
                             const PrimitiveState& right, const GasModel& g,
                             double x_over_t);

}  // namespace geno1d
