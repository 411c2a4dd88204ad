#include "geno1d/euler.hpp"

#include <cmath>

namespace geno1d {

bool is_admissible(const PrimitiveState& s) {
  return std::isfinite(s.rho) && std::isfinite(s.u) && std::isfinite(s.p) &&
         s.rho > 0.0 && s.p > 0.0;
}

bool is_admissible(const ConservedState& w) {
  if (!(std::isfinite(w.rho) && std::isfinite(w.mom) && std::isfinite(w.E)))
    return false;
  if (!(w.rho > 0.0)) return false;
  const double e_int = w.E - 0.5 * w.mom * w.mom / w.rho;
  return e_int > 0.0;
}

ConservedState prim_to_cons(const PrimitiveState& s, const GasModel& g) {
  if (!is_admissible(s))
    throw AdmissibilityError("prim_to_cons: non-admissible primitive state");
  ConservedState w;
  w.rho = s.rho;
  w.mom = s.rho * s.u;
  w.E = s.p / (g.gamma - 1.0) + 0.5 * s.rho * s.u * s.u;
  return w;
}

PrimitiveState cons_to_prim(const ConservedState& w, const GasModel& g) {
  if (!is_admissible(w))
    throw AdmissibilityError("cons_to_prim: non-admissible conserved state");
  PrimitiveState s;
  s.rho = w.rho;
  s.u = w.mom / w.rho;
  s.p = (g.gamma - 1.0) * (w.E - 0.5 * w.mom * w.mom / w.rho);
  return s;
}

double sound_speed(const PrimitiveState& s, const GasModel& g) {
  if (!is_admissible(s))
    throw AdmissibilityError("sound_speed: non-admissible primitive state");
  return std::sqrt(g.gamma * s.p / s.rho);
}

FluxTriple physical_flux(const ConservedState& w, const GasModel& g) {
  const PrimitiveState s = cons_to_prim(w, g);
  return {w.mom, w.mom * s.u + s.p, s.u * (w.E + s.p)};
}

double max_signal_speed(std::span<const ConservedState> cells, const GasModel& g) {
  double smax = 0.0;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (!is_admissible(cells[j]))
      throw AdmissibilityError(
          "max_signal_speed: non-admissible state at cell " + std::to_string(j),
          static_cast<long>(j));
    const PrimitiveState s = cons_to_prim(cells[j], g);
    const double speed = std::abs(s.u) + std::sqrt(g.gamma * s.p / s.rho);
    if (speed > smax) smax = speed;
  }
  return smax;
}

std::array<double, 3> CharBasis::project(const ConservedState& w) const {
  std::array<double, 3> v{};
  const double q[3] = {w.rho, w.mom, w.E};
  for (int i = 0; i < 3; ++i)
    v[i] = left[i][0] * q[0] + left[i][1] * q[1] + left[i][2] * q[2];
  return v;
}

ConservedState CharBasis::lift(const std::array<double, 3>& v) const {
  ConservedState w;
  w.rho = right[0][0] * v[0] + right[0][1] * v[1] + right[0][2] * v[2];
  w.mom = right[1][0] * v[0] + right[1][1] * v[1] + right[1][2] * v[2];
  w.E = right[2][0] * v[0] + right[2][1] * v[1] + right[2][2] * v[2];
  return w;
}

CharBasis roe_basis(const PrimitiveState& left, const PrimitiveState& right,
                    const GasModel& g) {
  if (!is_admissible(left) || !is_admissible(right))
    throw AdmissibilityError("roe_basis: non-admissible input state");

  const double gm1 = g.gamma - 1.0;
  const double srl = std::sqrt(left.rho);
  const double srr = std::sqrt(right.rho);
  const double inv = 1.0 / (srl + srr);

  const double hl = g.gamma / gm1 * left.p / left.rho + 0.5 * left.u * left.u;
  const double hr = g.gamma / gm1 * right.p / right.rho + 0.5 * right.u * right.u;

  const double u = (srl * left.u + srr * right.u) * inv;
  const double h = (srl * hl + srr * hr) * inv;

  const double a2 = gm1 * (h - 0.5 * u * u);
  if (!(a2 > 0.0))
    throw AdmissibilityError("roe_basis: non-positive Roe sound speed");
  const double a = std::sqrt(a2);

  CharBasis basis;
  // Right eigenvectors as columns, ordered by wave speed u-a, u, u+a.
  basis.right = {{{1.0, 1.0, 1.0},
                  {u - a, u, u + a},
                  {h - u * a, 0.5 * u * u, h + u * a}}};

  const double b1 = gm1 / a2;
  const double b2 = 0.5 * b1 * u * u;
  basis.left = {{{0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), 0.5 * b1},
                 {1.0 - b2, b1 * u, -b1},
                 {0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), 0.5 * b1}}};
  return basis;
}

}  // namespace geno1d
