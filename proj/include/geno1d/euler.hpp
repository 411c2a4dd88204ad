#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>

namespace geno1d {

//! Pointwise primitive state (density, velocity, pressure) of a gamma-law gas.
struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

//! Pointwise conserved state: density, momentum density, total energy density.
struct ConservedState {
  double rho = 0.0;
  double mom = 0.0;
  double E = 0.0;
};

//! Gamma-law equation-of-state parameters.
struct GasModel {
  double gamma = 1.4;
};

using FluxTriple = std::array<double, 3>;

//! Recoverable error for states with non-positive density, pressure, or
//! internal energy. `cell` is the offending cell index when known, -1 otherwise.
class AdmissibilityError : public std::runtime_error {
public:
  explicit AdmissibilityError(const std::string& what, long cell = -1)
      : std::runtime_error(what), cell_(cell) {}
  long cell() const { return cell_; }

private:
  long cell_;
};

bool is_admissible(const PrimitiveState& s);
bool is_admissible(const ConservedState& w);

ConservedState prim_to_cons(const PrimitiveState& s, const GasModel& g);
PrimitiveState cons_to_prim(const ConservedState& w, const GasModel& g);

//! sqrt(gamma p / rho)
double sound_speed(const PrimitiveState& s, const GasModel& g);

//! Convective Euler flux (rho u, rho u^2 + p, u (E + p)).
FluxTriple physical_flux(const ConservedState& w, const GasModel& g);

//! Largest |u| + c over a range of cell states; throws with the offending
//! index if any state is inadmissible.
double max_signal_speed(std::span<const ConservedState> cells, const GasModel& g);

//! Left/right eigenvector matrices of the flux Jacobian at a Roe-averaged
//! state. Rows of `left` are left eigenvectors; columns of `right` are right
//! eigenvectors; left * right = identity.
struct CharBasis {
  std::array<std::array<double, 3>, 3> left{};
  std::array<std::array<double, 3>, 3> right{};

  std::array<double, 3> project(const ConservedState& w) const;
  ConservedState lift(const std::array<double, 3>& v) const;
};

CharBasis roe_basis(const PrimitiveState& left, const PrimitiveState& right,
                    const GasModel& g);

}  // namespace geno1d
