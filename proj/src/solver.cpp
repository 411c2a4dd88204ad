#include "geno1d/solver.hpp"

#include <chrono>
#include <cmath>

namespace geno1d {

CellField::CellField(int n_cells, double xmin, double xmax, int ghosts)
    : n(n_cells), n_ghost(ghosts), x_min(xmin), x_max(xmax),
      data(n_cells + 2 * ghosts) {
  // periodic ghost fill reads interior cells up to n_ghost from each end
  if (n_cells < ghosts || ghosts < 3 || !(xmax > xmin))
    throw UsageError("CellField: invalid grid parameters");
}

void fill_ghosts(CellField& field, const BoundaryCondition& bc_left,
                 const BoundaryCondition& bc_right, double t, const GasModel& g) {
  (void)t;  // profiles are time-independent for the cases in scope
  const int ng = field.n_ghost;
  const int n = field.n;

  auto apply = [&](const BoundaryCondition& bc, bool left_side) {
    for (int k = 1; k <= ng; ++k) {
      const int ghost = left_side ? -k : n - 1 + k;
      switch (bc.kind) {
        case BoundaryCondition::Kind::periodic:
          field.cell(ghost) = field.cell(left_side ? n - k : k - 1);
          break;
        case BoundaryCondition::Kind::free:
          field.cell(ghost) = field.cell(left_side ? 0 : n - 1);
          break;
        case BoundaryCondition::Kind::reflective: {
          const ConservedState mirror = field.cell(left_side ? k - 1 : n - k);
          field.cell(ghost) = {mirror.rho, -mirror.mom, mirror.E};
          break;
        }
        case BoundaryCondition::Kind::fixed_profile: {
          if (!bc.profile)
            throw UsageError("fill_ghosts: fixed_profile without a profile");
          field.cell(ghost) = prim_to_cons(bc.profile(field.center(ghost)), g);
          break;
        }
      }
    }
  };
  apply(bc_left, true);
  apply(bc_right, false);
}

void positivity_guard(InterfaceState& iface, const ConservedState& left_cell,
                      const ConservedState& right_cell, const GasModel& g,
                      RunStats* stats) {
  const bool bad = !(iface.left.rho > 0.0 && iface.left.p > 0.0 &&
                     iface.right.rho > 0.0 && iface.right.p > 0.0 &&
                     std::isfinite(iface.left.rho) && std::isfinite(iface.left.p) &&
                     std::isfinite(iface.right.rho) && std::isfinite(iface.right.p));
  if (!bad) return;
  iface.left = cons_to_prim(left_cell, g);
  iface.right = cons_to_prim(right_cell, g);
  iface.guarded = true;
  if (stats) ++stats->guard_activations;
}

std::vector<InterfaceState> reconstruct_interfaces(const CellField& field,
                                                   const SchemeConfig& cfg,
                                                   const GasModel& g,
                                                   RunStats* stats) {
  const SchemeRuntime rt(cfg.reconstruction, cfg.geno, cfg.teno);
  const bool characteristic = cfg.projection == Projection::characteristic;
  const int n = field.n;
  const int ng = field.n_ghost;
  std::vector<InterfaceState> out(n + 1);

  // Primitive states once per cell (each cell feeds two Roe averages).
  std::vector<PrimitiveState> prim(field.data.size());
  const double gm1 = g.gamma - 1.0;
  for (int i = -ng; i < n + ng; ++i) {
    const ConservedState& w = field.cell(i);
    if (!is_admissible(w))
      throw AdmissibilityError(
          "reconstruct_interfaces: non-admissible cell state at cell " +
              std::to_string(i),
          i);
    prim[i + ng] = {w.rho, w.mom / w.rho,
                    gm1 * (w.E - 0.5 * w.mom * w.mom / w.rho)};
  }

  double wdata[3][6];
  for (int k = 0; k <= n; ++k) {
    CharBasis basis;
    if (characteristic) basis = roe_basis(prim[k - 1 + ng], prim[k + ng], g);

    // union window: cells k-3 .. k+2
    for (int m = 0; m < 6; ++m) {
      const ConservedState& w = field.cell(k - 3 + m);
      if (characteristic) {
        const std::array<double, 3> v = basis.project(w);
        wdata[0][m] = v[0];
        wdata[1][m] = v[1];
        wdata[2][m] = v[2];
      } else {
        wdata[0][m] = w.rho;
        wdata[1][m] = w.mom;
        wdata[2][m] = w.E;
      }
    }

    // Left state: owner cell k-1 (forward orientation); right state mirrors
    // the owner window of cell k onto the same union slots.
    std::array<double, 3> vl{}, vr{};
    double chi_l = 1.0, chi_r = 1.0;
    for (int comp = 0; comp < 3; ++comp) {
      SideResult rl, rr;
      scheme_eval_interface(wdata[comp], rt, &rl, &rr);
      vl[comp] = rl.value;
      vr[comp] = rr.value;
      chi_l = std::min(chi_l, rl.chi);
      chi_r = std::min(chi_r, rr.chi);
    }

    ConservedState wl, wr;
    if (characteristic) {
      wl = basis.lift(vl);
      wr = basis.lift(vr);
    } else {
      wl = {vl[0], vl[1], vl[2]};
      wr = {vr[0], vr[1], vr[2]};
    }

    InterfaceState& iface = out[k];
    iface.chi_left = chi_l;
    iface.chi_right = chi_r;
    iface.left = {wl.rho, wl.mom / wl.rho,
                  gm1 * (wl.E - 0.5 * wl.mom * wl.mom / wl.rho)};
    iface.right = {wr.rho, wr.mom / wr.rho,
                   gm1 * (wr.E - 0.5 * wr.mom * wr.mom / wr.rho)};
    positivity_guard(iface, field.cell(k - 1), field.cell(k), g, stats);
    if (stats)
      stats->min_chi = std::min(stats->min_chi, std::min(chi_l, chi_r));
  }
  return out;
}

FluxTriple hllc_flux(const PrimitiveState& left, const PrimitiveState& right,
                     const GasModel& g) {
  if (!is_admissible(left) || !is_admissible(right))
    throw AdmissibilityError("hllc_flux: non-admissible input state");

  const double cl = std::sqrt(g.gamma * left.p / left.rho);
  const double cr = std::sqrt(g.gamma * right.p / right.rho);
  const double s_l = std::min(left.u - cl, right.u - cr);
  const double s_r = std::max(left.u + cl, right.u + cr);

  const double inv_gm1 = 1.0 / (g.gamma - 1.0);
  auto energy = [&](const PrimitiveState& s) {
    return s.p * inv_gm1 + 0.5 * s.rho * s.u * s.u;
  };
  auto flux_of = [&](const PrimitiveState& s, double E) {
    return FluxTriple{s.rho * s.u, s.rho * s.u * s.u + s.p, s.u * (E + s.p)};
  };

  const double el = energy(left);
  const double er = energy(right);
  if (s_l >= 0.0) return flux_of(left, el);
  if (s_r <= 0.0) return flux_of(right, er);

  const double ml = left.rho * (s_l - left.u);
  const double mr = right.rho * (s_r - right.u);
  const double s_star = (right.p - left.p + left.u * ml - right.u * mr) / (ml - mr);

  auto star_flux = [&](const PrimitiveState& s, double E, double s_k) {
    const FluxTriple f = flux_of(s, E);
    const double factor = s.rho * (s_k - s.u) / (s_k - s_star);
    const double e_star =
        factor * (E / s.rho +
                  (s_star - s.u) * (s_star + s.p / (s.rho * (s_k - s.u))));
    return FluxTriple{f[0] + s_k * (factor - s.rho),
                      f[1] + s_k * (factor * s_star - s.rho * s.u),
                      f[2] + s_k * (e_star - E)};
  };

  if (s_star >= 0.0) return star_flux(left, el, s_l);
  return star_flux(right, er, s_r);
}

std::vector<FluxTriple> spatial_residual(const CellField& field,
                                         const SchemeConfig& cfg,
                                         const GasModel& g, RunStats* stats) {
  const std::vector<InterfaceState> ifaces =
      reconstruct_interfaces(field, cfg, g, stats);
  const int n = field.n;
  std::vector<FluxTriple> flux(n + 1);
  for (int k = 0; k <= n; ++k)
    flux[k] = hllc_flux(ifaces[k].left, ifaces[k].right, g);

  std::vector<FluxTriple> res(n);
  const double inv_h = 1.0 / field.h();
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < 3; ++c)
      res[j][c] = -(flux[j + 1][c] - flux[j][c]) * inv_h;
  return res;
}

double compute_dt(const CellField& field, const SchemeConfig& cfg,
                  const GasModel& g, double t, double t_end) {
  const double smax = max_signal_speed(field.interior(), g);
  if (!(smax > 0.0)) throw UsageError("compute_dt: zero signal speed");
  double dt = cfg.cfl * field.h() / smax;
  if (t + dt > t_end) dt = t_end - t;
  return dt;
}

namespace {

void check_stage(const CellField& field, int stage) {
  for (int j = 0; j < field.n; ++j)
    if (!is_admissible(field.cell(j)))
      throw AdmissibilityError("rk4 stage " + std::to_string(stage) +
                                   ": inadmissible state at cell " +
                                   std::to_string(j),
                               j);
}

}  // namespace

void rk4_step(CellField& field, double dt, const SchemeConfig& cfg,
              const GasModel& g, const BoundaryCondition& bc_left,
              const BoundaryCondition& bc_right, double t, RunStats* stats) {
  if (!(dt > 0.0)) throw UsageError("rk4_step: dt must be positive");
  const int n = field.n;

  CellField stage = field;
  auto set_stage = [&](double coeff, const std::vector<FluxTriple>& k) {
    for (int j = 0; j < n; ++j) {
      const ConservedState& w0 = field.cell(j);
      stage.cell(j) = {w0.rho + coeff * k[j][0], w0.mom + coeff * k[j][1],
                       w0.E + coeff * k[j][2]};
    }
  };

  fill_ghosts(field, bc_left, bc_right, t, g);
  const std::vector<FluxTriple> k1 = spatial_residual(field, cfg, g, stats);

  set_stage(0.5 * dt, k1);
  check_stage(stage, 2);
  fill_ghosts(stage, bc_left, bc_right, t + 0.5 * dt, g);
  const std::vector<FluxTriple> k2 = spatial_residual(stage, cfg, g, stats);

  set_stage(0.5 * dt, k2);
  check_stage(stage, 3);
  fill_ghosts(stage, bc_left, bc_right, t + 0.5 * dt, g);
  const std::vector<FluxTriple> k3 = spatial_residual(stage, cfg, g, stats);

  set_stage(dt, k3);
  check_stage(stage, 4);
  fill_ghosts(stage, bc_left, bc_right, t + dt, g);
  const std::vector<FluxTriple> k4 = spatial_residual(stage, cfg, g, stats);

  const double sixth = dt / 6.0;
  for (int j = 0; j < n; ++j) {
    ConservedState& w = field.cell(j);
    w.rho += sixth * (k1[j][0] + 2.0 * (k2[j][0] + k3[j][0]) + k4[j][0]);
    w.mom += sixth * (k1[j][1] + 2.0 * (k2[j][1] + k3[j][1]) + k4[j][1]);
    w.E += sixth * (k1[j][2] + 2.0 * (k2[j][2] + k3[j][2]) + k4[j][2]);
  }
  check_stage(field, 5);
}

AdvanceResult advance_to_time(CellField& field, double t_end,
                              const SchemeConfig& cfg, const GasModel& g,
                              const BoundaryCondition& bc_left,
                              const BoundaryCondition& bc_right,
                              bool keep_history) {
  const auto t_start = std::chrono::steady_clock::now();
  AdvanceResult result;
  RunStats& stats = result.stats;

  auto scan_field = [&]() {
    double mr = std::numeric_limits<double>::infinity();
    double mp = mr;
    for (int j = 0; j < field.n; ++j) {
      const ConservedState& w = field.cell(j);
      if (!std::isfinite(w.rho) || !std::isfinite(w.mom) || !std::isfinite(w.E))
        stats.saw_nan = true;
      const double p =
          (g.gamma - 1.0) * (w.E - 0.5 * w.mom * w.mom / std::abs(w.rho));
      mr = std::min(mr, w.rho);
      mp = std::min(mp, p);
      stats.max_rho = std::max(stats.max_rho, w.rho);
      stats.max_p = std::max(stats.max_p, p);
    }
    stats.min_rho = std::min(stats.min_rho, mr);
    stats.min_p = std::min(stats.min_p, mp);
    return std::pair{mr, mp};
  };

  scan_field();
  double t = 0.0;
  const double tiny = 1e-12 * std::max(1.0, t_end);
  while (t < t_end - tiny) {
    const double dt = compute_dt(field, cfg, g, t, t_end);
    rk4_step(field, dt, cfg, g, bc_left, bc_right, t, &stats);
    t += dt;
    ++stats.steps;
    const auto [mr, mp] = scan_field();
    if (keep_history)
      result.history.push_back({t, dt, mr, mp, stats.guard_activations});
  }

  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace geno1d
