#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geno1d/solver.hpp"

namespace geno1d {

enum class ExactKind { analytic_advection, exact_riemann, fine_mesh_reference, none };

//! A benchmark definition: domain, initial data, boundaries, end time.
struct CaseConfig {
  std::string name;
  double x_min = 0.0;
  double x_max = 1.0;
  std::function<PrimitiveState(double)> initial;
  std::vector<double> breakpoints;  // jump locations of the initial data
  BoundaryCondition bc_left;
  BoundaryCondition bc_right;
  double t_end = 1.0;
  std::vector<int> default_meshes;
  double gamma = 1.4;
  ExactKind exact = ExactKind::none;
  double advection_speed = 0.0;        // analytic_advection only
  double riemann_split = 0.0;          // exact_riemann only
  PrimitiveState riemann_left, riemann_right;
  int reference_cells = 0;             // fine_mesh_reference default
  std::optional<double> recommended_teno_ct;  // documented stability override
};

std::vector<std::string> case_registry();

//! Throws UsageError (message lists the registry) for unknown names.
CaseConfig make_case(const std::string& name);

//! Initialize cell averages by 8-point Gauss-Legendre quadrature of the
//! conserved initial data, split at the case's breakpoints.
CellField init_field(const CaseConfig& cfg, int n_cells, const GasModel& g);

//! Exact density cell averages at time t for cases with a closed-form
//! solution (analytic_advection wraps periodically; exact_riemann splits
//! quadrature at the wave rays). Throws UsageError otherwise.
std::vector<double> exact_density_averages(const CaseConfig& cfg, int n_cells,
                                           double t, const GasModel& g);

}  // namespace geno1d
