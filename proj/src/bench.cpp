#include "geno1d/bench.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace geno1d {

#ifndef GENO1D_BUILD_ID
#define GENO1D_BUILD_ID "unknown"
#endif

std::string build_id() { return GENO1D_BUILD_ID; }

int scheme_design_order(Scheme s) { return scheme_window(s); }

RunResult run_case(const CaseConfig& cfg, const RunOptions& opt) {
  RunResult result;
  result.case_config = cfg;
  result.options = opt;
  result.t_end = opt.t_end.value_or(cfg.t_end);

  const GasModel gas{cfg.gamma};
  const int n = opt.cells > 0 ? opt.cells
                              : (cfg.default_meshes.empty() ? 100
                                                            : cfg.default_meshes.front());

  SchemeConfig scheme_cfg;
  scheme_cfg.reconstruction = opt.scheme;
  scheme_cfg.projection = opt.projection;
  scheme_cfg.geno = opt.geno;
  scheme_cfg.teno = opt.teno;
  scheme_cfg.cfl = opt.cfl;

  result.field = init_field(cfg, n, gas);
  AdvanceResult adv = advance_to_time(result.field, result.t_end, scheme_cfg, gas,
                                      cfg.bc_left, cfg.bc_right);
  result.stats = adv.stats;
  result.history = std::move(adv.history);

  if (opt.reference_cells > 0) {
    CaseConfig ref_cfg = cfg;
    ref_cfg.t_end = result.t_end;
    CellField ref = fine_mesh_reference(ref_cfg, opt.reference_cells, gas);
    const CellField coarse = restrict_field(ref, n);
    result.error = error_norms(result.field, density_of(coarse));
    result.error->scheme = scheme_name(opt.scheme);
  } else if (cfg.exact == ExactKind::analytic_advection ||
             (cfg.exact == ExactKind::exact_riemann && result.t_end > 0.0)) {
    const std::vector<double> exact =
        exact_density_averages(cfg, n, result.t_end, gas);
    result.error = error_norms(result.field, exact);
    result.error->scheme = scheme_name(opt.scheme);
  }
  return result;
}

CellField fine_mesh_reference(const CaseConfig& cfg, int n_ref, const GasModel& g) {
  SchemeConfig ref_cfg;
  ref_cfg.reconstruction = Scheme::geno6;
  ref_cfg.projection = Projection::characteristic;
  ref_cfg.cfl = 0.5;
  CellField field = init_field(cfg, n_ref, g);
  advance_to_time(field, cfg.t_end, ref_cfg, g, cfg.bc_left, cfg.bc_right,
                  /*keep_history=*/false);
  return field;
}

ConvergenceTable convergence_study(const CaseConfig& cfg,
                                   const std::vector<Scheme>& schemes,
                                   const std::vector<int>& meshes,
                                   const RunOptions& base) {
  if (meshes.empty()) throw UsageError("convergence_study: empty mesh list");
  for (std::size_t i = 1; i < meshes.size(); ++i)
    if (meshes[i] != 2 * meshes[i - 1])
      throw UsageError("convergence_study: meshes must double");

  ConvergenceTable table;
  for (Scheme s : schemes) {
    const int order = scheme_design_order(s);
    double prev_l1 = 0.0;
    for (std::size_t i = 0; i < meshes.size(); ++i) {
      RunOptions opt = base;
      opt.scheme = s;
      opt.cells = meshes[i];
      // dt ~ h^{p/4} keeps the RK4 truncation refining at the spatial order
      const double ratio = static_cast<double>(meshes.front()) / meshes[i];
      opt.cfl = base.cfl * std::pow(ratio, (order - 4) / 4.0);
      const RunResult r = run_case(cfg, opt);
      if (!r.error)
        throw UsageError("convergence_study: case has no exact solution");
      ConvergenceRow row;
      row.scheme = scheme_name(s);
      row.n = meshes[i];
      row.l1 = r.error->l1;
      row.l2 = r.error->l2;
      row.linf = r.error->linf;
      row.order_l1 = i == 0 ? 0.0 : std::log2(prev_l1 / row.l1);
      prev_l1 = row.l1;
      table.rows.push_back(row);
    }
  }
  return table;
}

std::vector<ChiReportRow> chi_report(SweepScenario scenario, double phi_min,
                                     double phi_max, int points,
                                     SweepMultiplicity multiplicity,
                                     const GenoParams& geno,
                                     const TenoParams& teno) {
  if (points < 2 || !(phi_min >= 1.0) || !(phi_max > phi_min))
    throw UsageError("chi_report: bad phi range");
  std::vector<double> grid(points);
  const double lmin = std::log10(phi_min);
  const double lmax = std::log10(phi_max);
  for (int i = 0; i < points; ++i)
    grid[i] = std::pow(10.0, lmin + (lmax - lmin) * i / (points - 1));

  const auto g = chi_scenario_sweep(scenario, grid, SweepMethod::geno,
                                    multiplicity, geno, teno);
  const auto z = chi_scenario_sweep(scenario, grid, SweepMethod::weno_z,
                                    multiplicity, geno, teno);
  const auto t = chi_scenario_sweep(scenario, grid, SweepMethod::teno,
                                    multiplicity, geno, teno);

  std::vector<ChiReportRow> rows(points);
  for (int i = 0; i < points; ++i)
    rows[i] = {grid[i], g[i].second, z[i].second, t[i].second};
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_run_header(std::ofstream& out, const RunResult& r) {
  const RunOptions& o = r.options;
  out << "# case=" << r.case_config.name << "\n";
  out << "# scheme=" << scheme_name(o.scheme) << "\n";
  out << "# cells=" << r.field.n << "\n";
  out << "# cfl=" << fmt(o.cfl) << "\n";
  out << "# projection="
      << (o.projection == Projection::characteristic ? "characteristic"
                                                     : "componentwise")
      << "\n";
  out << "# gamma=" << fmt(r.case_config.gamma) << "\n";
  out << "# t_end=" << fmt(r.t_end) << "\n";
  out << "# geno_C=" << fmt(o.geno.C) << " geno_r=" << fmt(o.geno.r)
      << " geno_r_low=" << fmt(o.geno.r_low) << " geno_eps=" << fmt(o.geno.eps)
      << " geno_C0=" << fmt(o.geno.C0) << "\n";
  out << "# teno_exponent=" << o.teno.exponent << " teno_ct=" << fmt(o.teno.c_t)
      << "\n";
  out << "# build=" << build_id() << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

}  // namespace

void write_solution_csv(const RunResult& result, const std::string& path) {
  std::ofstream out = open_out(path);
  write_run_header(out, result);
  out << "x,rho,u,p\n";
  const GasModel gas{result.case_config.gamma};
  for (int j = 0; j < result.field.n; ++j) {
    const PrimitiveState s = cons_to_prim(result.field.cell(j), gas);
    out << fmt(result.field.center(j)) << ',' << fmt(s.rho) << ',' << fmt(s.u)
        << ',' << fmt(s.p) << "\n";
  }
}

void write_diagnostics_csv(const RunResult& result, const std::string& path) {
  std::ofstream out = open_out(path);
  write_run_header(out, result);
  out << "# steps=" << result.stats.steps
      << " guard_activations=" << result.stats.guard_activations
      << " min_rho=" << fmt(result.stats.min_rho)
      << " max_rho=" << fmt(result.stats.max_rho)
      << " min_p=" << fmt(result.stats.min_p)
      << " max_p=" << fmt(result.stats.max_p)
      << " nan=" << (result.stats.saw_nan ? 1 : 0)
      << " wall_seconds=" << fmt(result.stats.wall_seconds) << "\n";
  out << "step,t,dt,min_rho,min_p,guard_activations\n";
  for (std::size_t i = 0; i < result.history.size(); ++i) {
    const PerStepRecord& rec = result.history[i];
    out << (i + 1) << ',' << fmt(rec.t) << ',' << fmt(rec.dt) << ','
        << fmt(rec.min_rho) << ',' << fmt(rec.min_p) << ','
        << rec.guard_activations << "\n";
  }
}

void write_convergence_csv(const ConvergenceTable& table, const CaseConfig& cfg,
                           const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# case=" << cfg.name << "\n";
  out << "# build=" << build_id() << "\n";
  out << "scheme,cells,l1,l2,linf,order_l1\n";
  for (const ConvergenceRow& r : table.rows)
    out << r.scheme << ',' << r.n << ',' << fmt(r.l1) << ',' << fmt(r.l2) << ','
        << fmt(r.linf) << ',' << fmt(r.order_l1) << "\n";
}

void write_chi_csv(const std::vector<ChiReportRow>& rows, SweepScenario scenario,
                   const std::string& path) {
  std::ofstream out = open_out(path);
  out << "# scenario="
      << (scenario == SweepScenario::tau_min ? "tau_min" : "tau_max") << "\n";
  out << "# build=" << build_id() << "\n";
  out << "phi,chi_geno,chi_weno_z,chi_teno\n";
  for (const ChiReportRow& r : rows)
    out << fmt(r.phi) << ',' << fmt(r.geno) << ',' << fmt(r.weno_z) << ','
        << fmt(r.teno) << "\n";
}

}  // namespace geno1d
