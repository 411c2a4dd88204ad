#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "geno1d/euler.hpp"
#include "geno1d/schemes.hpp"

namespace geno1d {

//! Cell-averaged conserved data on a uniform 1-D grid with ghost layers.
struct CellField {
  int n = 0;
  int n_ghost = 3;
  double x_min = 0.0;
  double x_max = 1.0;
  std::vector<ConservedState> data;  // size n + 2 n_ghost

  CellField() = default;
  CellField(int n_cells, double xmin, double xmax, int ghosts = 3);

  double h() const { return (x_max - x_min) / n; }
  double center(int i) const { return x_min + (i + 0.5) * h(); }

  //! Cell access by interior index; ghosts live at -n_ghost..-1 and n..n+n_ghost-1.
  ConservedState& cell(int i) { return data[i + n_ghost]; }
  const ConservedState& cell(int i) const { return data[i + n_ghost]; }

  std::span<const ConservedState> interior() const {
    return {data.data() + n_ghost, static_cast<std::size_t>(n)};
  }
};

struct BoundaryCondition {
  enum class Kind { periodic, free, reflective, fixed_profile };
  Kind kind = Kind::periodic;
  //! Analytic primitive state at a ghost-cell center (fixed_profile only).
  std::function<PrimitiveState(double x)> profile;
};

enum class Projection { characteristic, componentwise };

struct SchemeConfig {
  Scheme reconstruction = Scheme::geno5;
  Projection projection = Projection::characteristic;
  GenoParams geno;
  TenoParams teno;
  double cfl = 0.5;
};

//! Accumulated per-run solver counters.
struct RunStats {
  long steps = 0;
  long guard_activations = 0;
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
  double max_rho = 0.0;
  double max_p = 0.0;
  double min_chi = 1.0;
  bool saw_nan = false;
  double wall_seconds = 0.0;
};

struct PerStepRecord {
  double t = 0.0;
  double dt = 0.0;
  double min_rho = 0.0;
  double min_p = 0.0;
  long guard_activations = 0;  // cumulative
};

struct InterfaceState {
  PrimitiveState left;
  PrimitiveState right;
  double chi_left = 1.0;
  double chi_right = 1.0;
  bool guarded = false;
};

void fill_ghosts(CellField& field, const BoundaryCondition& bc_left,
                 const BoundaryCondition& bc_right, double t, const GasModel& g);

//! One-sided limits at the n+1 interfaces. Ghosts must be filled.
std::vector<InterfaceState> reconstruct_interfaces(const CellField& field,
                                                   const SchemeConfig& cfg,
                                                   const GasModel& g,
                                                   RunStats* stats = nullptr);

//! First-order fallback for inadmissible reconstructed states: both sides are
//! replaced with the adjacent cell averages and the activation is counted.
void positivity_guard(InterfaceState& iface, const ConservedState& left_cell,
                      const ConservedState& right_cell, const GasModel& g,
                      RunStats* stats);

//! Three-wave HLLC flux with Davis wave-speed estimates.
FluxTriple hllc_flux(const PrimitiveState& left, const PrimitiveState& right,
                     const GasModel& g);

//! -(F_{j+1/2} - F_{j-1/2})/h per interior cell. Ghosts must be filled.
std::vector<FluxTriple> spatial_residual(const CellField& field,
                                         const SchemeConfig& cfg,
                                         const GasModel& g,
                                         RunStats* stats = nullptr);

//! cfl h / max signal speed, truncated to land on t_end.
double compute_dt(const CellField& field, const SchemeConfig& cfg,
                  const GasModel& g, double t = 0.0,
                  double t_end = std::numeric_limits<double>::infinity());

//! Classical four-stage RK4 step with ghost refill at every stage time.
void rk4_step(CellField& field, double dt, const SchemeConfig& cfg,
              const GasModel& g, const BoundaryCondition& bc_left,
              const BoundaryCondition& bc_right, double t,
              RunStats* stats = nullptr);

struct AdvanceResult {
  RunStats stats;
  std::vector<PerStepRecord> history;
};

AdvanceResult advance_to_time(CellField& field, double t_end,
                              const SchemeConfig& cfg, const GasModel& g,
                              const BoundaryCondition& bc_left,
                              const BoundaryCondition& bc_right,
                              bool keep_history = true);

}  // namespace geno1d
