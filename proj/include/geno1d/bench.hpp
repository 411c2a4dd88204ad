#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geno1d/cases.hpp"
#include "geno1d/norms.hpp"

namespace geno1d {

std::string build_id();

struct RunOptions {
  Scheme scheme = Scheme::geno5;
  int cells = 0;  // 0: first default mesh of the case
  double cfl = 0.5;
  Projection projection = Projection::characteristic;
  GenoParams geno;
  TenoParams teno;
  std::optional<double> t_end;   // override the case end time
  int reference_cells = 0;       // >0: compare against a fine-mesh reference
};

struct RunResult {
  CaseConfig case_config;
  RunOptions options;
  double t_end = 0.0;
  CellField field;
  RunStats stats;
  std::vector<PerStepRecord> history;
  std::optional<ErrorReport> error;
};

//! Run one case to its end time; computes error norms when the case has a
//! closed-form solution or a reference was requested.
RunResult run_case(const CaseConfig& cfg, const RunOptions& opt);

//! Reference solution: a GENO6 run at n_ref cells (characteristic
//! projection, CFL 0.5), for cases without a closed-form solution.
CellField fine_mesh_reference(const CaseConfig& cfg, int n_ref,
                              const GasModel& g);

struct ConvergenceRow {
  std::string scheme;
  int n = 0;
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
  double order_l1 = 0.0;  // log2(e_{2h}/e_h); 0 on the first row of a scheme
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
};

//! Error-vs-refinement study over strictly doubling meshes. Time steps are
//! scaled as dt ~ h^{p/4} for design order p > 4 so the four-stage RK error
//! refines at the spatial rate.
ConvergenceTable convergence_study(const CaseConfig& cfg,
                                   const std::vector<Scheme>& schemes,
                                   const std::vector<int>& meshes,
                                   const RunOptions& base);

//! Design order of a scheme's linear reconstruction (5 or 6).
int scheme_design_order(Scheme s);

struct ChiReportRow {
  double phi = 0.0;
  double geno = 0.0;
  double weno_z = 0.0;
  double teno = 0.0;
};

//! Linear-proportion sweep of all three methods over log-spaced phi.
std::vector<ChiReportRow> chi_report(
    SweepScenario scenario, double phi_min = 1.0, double phi_max = 1e8,
    int points = 81,
    SweepMultiplicity multiplicity = SweepMultiplicity::two_large,
    const GenoParams& geno = {}, const TenoParams& teno = {});

// CSV emission. Data rows carry 17 significant digits; a '#'-prefixed
// comment block records the run configuration and build id.
void write_solution_csv(const RunResult& result, const std::string& path);
void write_diagnostics_csv(const RunResult& result, const std::string& path);
void write_convergence_csv(const ConvergenceTable& table, const CaseConfig& cfg,
                           const std::string& path);
void write_chi_csv(const std::vector<ChiReportRow>& rows, SweepScenario scenario,
                   const std::string& path);

}  // namespace geno1d
