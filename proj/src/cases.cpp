#include "geno1d/cases.hpp"

#include <algorithm>
#include <cmath>

#include "geno1d/exact_riemann.hpp"
#include "geno1d/recon.hpp"

namespace geno1d {

namespace {

constexpr double kPi = 3.14159265358979323846;

CaseConfig sine_advection() {
  CaseConfig c;
  c.name = "sine_advection";
  c.x_min = 0.0;
  c.x_max = 2.0;
  c.initial = [](double x) {
    return PrimitiveState{1.0 + 0.2 * std::sin(kPi * x), 1.0, 1.0};
  };
  c.bc_left.kind = BoundaryCondition::Kind::periodic;
  c.bc_right.kind = BoundaryCondition::Kind::periodic;
  c.t_end = 2.0;
  c.default_meshes = {40, 80, 160};
  c.exact = ExactKind::analytic_advection;
  c.advection_speed = 1.0;
  return c;
}

CaseConfig entropy_gaussian() {
  CaseConfig c;
  c.name = "entropy_gaussian";
  c.x_min = -800.0;
  c.x_max = 1000.0;
  const double b = 1.5;
  c.initial = [b](double x) {
    return PrimitiveState{
        1.0 + 0.5 * std::exp(-std::log(2.0) * x * x / (b * b)), 1.0, 1.0};
  };
  c.bc_left.kind = BoundaryCondition::Kind::periodic;
  c.bc_right.kind = BoundaryCondition::Kind::periodic;
  c.t_end = 400.0;
  c.default_meshes = {1800};
  c.exact = ExactKind::analytic_advection;
  c.advection_speed = 1.0;
  return c;
}

CaseConfig shu_osher() {
  CaseConfig c;
  c.name = "shu_osher";
  c.x_min = 0.0;
  c.x_max = 10.0;
  c.initial = [](double x) {
    if (x <= 1.0)
      return PrimitiveState{27.0 / 7.0, 4.0 * std::sqrt(35.0) / 9.0, 31.0 / 3.0};
    return PrimitiveState{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
  };
  c.breakpoints = {1.0};
  c.bc_left.kind = BoundaryCondition::Kind::free;
  c.bc_right.kind = BoundaryCondition::Kind::free;
  c.t_end = 1.8;
  c.default_meshes = {200};
  c.exact = ExactKind::fine_mesh_reference;
  c.reference_cells = 4000;
  return c;
}

CaseConfig titarev_toro() {
  CaseConfig c;
  c.name = "titarev_toro";
  c.x_min = -5.0;
  c.x_max = 5.0;
  const PrimitiveState left{1.515695, 0.523346, 1.805};
  auto wave = [](double x) {
    return PrimitiveState{1.0 + 0.1 * std::sin(20.0 * kPi * x), 0.0, 1.0};
  };
  c.initial = [left, wave](double x) { return x <= -4.0 ? left : wave(x); };
  c.breakpoints = {-4.0};
  c.bc_left.kind = BoundaryCondition::Kind::fixed_profile;
  c.bc_left.profile = [left](double) { return left; };
  c.bc_right.kind = BoundaryCondition::Kind::fixed_profile;
  c.bc_right.profile = wave;
  c.t_end = 5.0;
  c.default_meshes = {1000};
  c.exact = ExactKind::fine_mesh_reference;
  c.reference_cells = 8000;
  c.recommended_teno_ct = 1e-3;
  return c;
}

CaseConfig blast_wave() {
  CaseConfig c;
  c.name = "blast_wave";
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.initial = [](double x) {
    double p = 0.01;
    if (x < 0.1)
      p = 1000.0;
    else if (x >= 0.9)
      p = 100.0;
    return PrimitiveState{1.0, 0.0, p};
  };
  c.breakpoints = {0.1, 0.9};
  c.bc_left.kind = BoundaryCondition::Kind::reflective;
  c.bc_right.kind = BoundaryCondition::Kind::reflective;
  c.t_end = 0.038;
  c.default_meshes = {400};
  c.exact = ExactKind::fine_mesh_reference;
  c.reference_cells = 6400;
  return c;
}

CaseConfig sod() {
  CaseConfig c;
  c.name = "sod";
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.riemann_left = {1.0, 0.0, 1.0};
  c.riemann_right = {0.125, 0.0, 0.1};
  c.riemann_split = 0.5;
  const PrimitiveState l = c.riemann_left, r = c.riemann_right;
  c.initial = [l, r](double x) { return x < 0.5 ? l : r; };
  c.breakpoints = {0.5};
  c.bc_left.kind = BoundaryCondition::Kind::free;
  c.bc_right.kind = BoundaryCondition::Kind::free;
  c.t_end = 0.2;
  c.default_meshes = {100};
  c.exact = ExactKind::exact_riemann;
  return c;
}

}  // namespace

std::vector<std::string> case_registry() {
  return {"sine_advection", "entropy_gaussian", "shu_osher",
          "titarev_toro",   "blast_wave",       "sod"};
}

CaseConfig make_case(const std::string& name) {
  if (name == "sine_advection") return sine_advection();
  if (name == "entropy_gaussian") return entropy_gaussian();
  if (name == "shu_osher") return shu_osher();
  if (name == "titarev_toro") return titarev_toro();
  if (name == "blast_wave") return blast_wave();
  if (name == "sod") return sod();
  std::string msg = "unknown case '" + name + "'; registry:";
  for (const std::string& c : case_registry()) msg += " " + c;
  throw UsageError(msg);
}

namespace {

//! Average of f over [a, b], split at the listed breakpoints.
double piecewise_average(const std::function<double(double)>& f, double a,
                         double b, const std::vector<double>& breaks) {
  std::vector<double> edges = {a, b};
  for (double s : breaks)
    if (s > a && s < b) edges.push_back(s);
  std::sort(edges.begin(), edges.end());
  double integral = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    integral += cell_average_of(f, edges[i], edges[i + 1]) * (edges[i + 1] - edges[i]);
  return integral / (b - a);
}

}  // namespace

CellField init_field(const CaseConfig& cfg, int n_cells, const GasModel& g) {
  CellField field(n_cells, cfg.x_min, cfg.x_max);
  const double h = field.h();
  for (int j = 0; j < n_cells; ++j) {
    const double a = cfg.x_min + j * h;
    const double b = a + h;
    ConservedState w;
    w.rho = piecewise_average(
        [&](double x) { return prim_to_cons(cfg.initial(x), g).rho; }, a, b,
        cfg.breakpoints);
    w.mom = piecewise_average(
        [&](double x) { return prim_to_cons(cfg.initial(x), g).mom; }, a, b,
        cfg.breakpoints);
    w.E = piecewise_average(
        [&](double x) { return prim_to_cons(cfg.initial(x), g).E; }, a, b,
        cfg.breakpoints);
    field.cell(j) = w;
  }
  return field;
}

std::vector<double> exact_density_averages(const CaseConfig& cfg, int n_cells,
                                           double t, const GasModel& g) {
  const double h = (cfg.x_max - cfg.x_min) / n_cells;
  std::vector<double> rho(n_cells);

  if (cfg.exact == ExactKind::analytic_advection) {
    const double length = cfg.x_max - cfg.x_min;
    auto wrapped = [&](double x) {
      double y = x - cfg.advection_speed * t;
      y -= length * std::floor((y - cfg.x_min) / length);
      return cfg.initial(y).rho;
    };
    for (int j = 0; j < n_cells; ++j) {
      const double a = cfg.x_min + j * h;
      rho[j] = cell_average_of(wrapped, a, a + h);
    }
    return rho;
  }

  if (cfg.exact == ExactKind::exact_riemann) {
    if (!(t > 0.0)) throw UsageError("exact_density_averages: need t > 0");
    const RiemannSolution sol = solve_riemann(cfg.riemann_left, cfg.riemann_right, g);
    std::vector<double> breaks;
    for (double s : sol.wave_speeds()) breaks.push_back(cfg.riemann_split + s * t);
    auto f = [&](double x) { return sol.sample((x - cfg.riemann_split) / t).rho; };
    for (int j = 0; j < n_cells; ++j) {
      const double a = cfg.x_min + j * h;
      rho[j] = piecewise_average(f, a, a + h, breaks);
    }
    return rho;
  }

  throw UsageError("exact_density_averages: case has no closed-form solution");
}

}  // namespace geno1d
