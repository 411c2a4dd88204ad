#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geno1d/nonlinear.hpp"
#include "geno1d/recon.hpp"

namespace geno1d {

enum class Scheme {
  geno5,
  geno6,
  weno_js5,
  weno_z5,
  teno5,
  teno6,
  linear5,
  linear6,
};

std::string scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

//! Number of cells in the reconstruction window of a scheme (5 or 6),
//! ordered owner-forward: offsets -2.. relative to the owner cell.
int scheme_window(Scheme s);

//! Precomputed reconstruction operators of one stencil family: interface
//! value rows and smoothness quadratic forms, all in the local coordinate
//! with unit cell width (data-independent on uniform grids).
struct SubStencilOp {
  int first = 0;  // index of the sub-stencil's first cell within the window
  int size = 0;
  int degree = 0;
  std::array<double, 4> value_row{};
  std::array<double, 16> is_form{};  // size x size, row-major

  double value(const double* window) const;
  double smoothness(const double* window) const;
};

struct SchemeFamily {
  int window = 0;
  int central_sub = 0;  // sub-stencil symmetric about the owner cell
  std::vector<SubStencilOp> subs;
  std::vector<double> large_row;  // interface value of the large polynomial
  std::vector<double> d_opt;      // optimal linear weights (derived)

  double large_value(const double* window) const;
};

const SchemeFamily& family5();
const SchemeFamily& family6();
const SchemeFamily& family_for(Scheme s);

//! Per-run reconstruction settings with cached constants.
struct SchemeRuntime {
  Scheme scheme = Scheme::geno5;
  GenoParams geno;
  TenoParams teno;
  double tanh_C = 0.0;

  SchemeRuntime() { finalize(); }
  SchemeRuntime(Scheme s, const GenoParams& gp, const TenoParams& tp)
      : scheme(s), geno(gp), teno(tp) {
    finalize();
  }
  void finalize();
};

struct SideResult {
  double value = 0.0;
  double chi = 1.0;  // path value; 1 for linear and baseline schemes
};

//! Evaluate one one-sided interface value from window data in owner-forward
//! order (window length = scheme_window). Heap-free hot path.
SideResult scheme_eval(const double* window, const SchemeRuntime& rt);

//! Evaluate both one-sided limits at an interface from the six-cell union
//! window (cells k-3..k+2 at interface k, forward order). For the six-cell
//! GENO family the three-point tau is bound to the interface-symmetric large
//! stencil (max over both orientations); other schemes reduce to two
//! independent scheme_eval calls on the appropriate slices.
void scheme_eval_interface(const double* union6, const SchemeRuntime& rt,
                           SideResult* left, SideResult* right);

// ---------------------------------------------------------------------------
// 8th-order compact (Hermite) reconstruction operator. Standalone: it is
// validated statically and is not wired into the time-marching driver.
// ---------------------------------------------------------------------------

//! Cell averages and cell-averaged gradients on cells j-1, j, j+1, j+2.
struct CompactWindow {
  std::array<double, 4> avg{};
  std::array<double, 4> grad{};  // physical d/dx averages
};

//! Interface value at x_{j+1/2} of the degree-7 Hermite reconstruction.
double compact8_linear_value(const CompactWindow& w, double h);

//! Blended compact reconstruction at x_{j+1/2}; fills the smoothness record
//! when `bundle` is non-null.
double compact8_geno_value(const CompactWindow& w, double h,
                           const GenoParams& params,
                           SmoothnessBundle* bundle = nullptr);

//! Hermite stencil specs of the compact family (large S0 and subs S1..S3).
StencilSpec compact8_large_spec();
std::vector<StencilSpec> compact8_sub_specs();

}  // namespace geno1d
