#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace geno1d {

//! Polynomial in the local cell coordinate xi = (x - x_j)/h of the
//! reconstruction cell j. coeffs[m] multiplies xi^m.
struct ReconPolynomial {
  int degree = 0;
  std::vector<double> coeffs;
  double h = 1.0;

  //! Horner evaluation at a local coordinate.
  double value(double xi) const;
  //! Average of the polynomial over the unit-width cell at integer offset.
  double cell_average(int offset) const;
  //! Average of d(poly)/dx over the cell at integer offset (physical units).
  double cell_average_gradient(int offset) const;
};

double eval_poly(const ReconPolynomial& poly, double xi);

//! Cell offsets whose averages constrain a reconstruction polynomial;
//! gradient_offsets lists cells whose cell-averaged gradient is an
//! additional constraint (Hermite-type stencils).
struct StencilSpec {
  std::vector<int> offsets;
  std::vector<int> gradient_offsets;

  int constraint_count() const {
    return static_cast<int>(offsets.size() + gradient_offsets.size());
  }
};

class ReconstructionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Average of f over [a, b] by 8-point Gauss-Legendre quadrature
//! (exact through polynomial degree 15).
double cell_average_of(const std::function<double(double)>& f, double a, double b);

//! Unique polynomial of degree |offsets|-1 whose cell averages over the
//! stencil reproduce `averages`. No gradient constraints allowed here.
ReconPolynomial build_interp_poly(std::span<const double> averages,
                                  const StencilSpec& spec, double h);

//! Hermite-type polynomial matching cell averages plus cell-averaged
//! gradients on the cells listed in spec.gradient_offsets.
ReconPolynomial build_hermite_poly(std::span<const double> averages,
                                   std::span<const double> gradient_averages,
                                   const StencilSpec& spec, double h);

//! Scaled square-derivative smoothness measure over the central cell:
//! sum_{l=1..max_order} h^{2l-1} int_cell (d^l q / dx^l)^2 dx,
//! evaluated exactly. In local coordinates the h powers cancel.
double smoothness_indicator(const ReconPolynomial& poly, int max_order);

//! Linear weights d_k with sum d_k p_k(xi_eval) == p_large(xi_eval) for all
//! data. Throws ReconstructionError if no consistent weights exist.
std::vector<double> derive_optimal_weights(const std::vector<StencilSpec>& sub_specs,
                                           const StencilSpec& large_spec,
                                           double xi_eval);

namespace detail {

//! Dense linear solve (Gaussian elimination, partial pivoting); a is n x n
//! row-major and is destroyed. Throws ReconstructionError on singularity.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n);

//! Row of average-constraint coefficients: entry m is the average of xi^m
//! over the unit cell at `offset`.
std::vector<double> average_row(int offset, int ncoeff);

//! Row of gradient-constraint coefficients: entry m is xi^m evaluated across
//! the cell at `offset` (right edge minus left edge); equals h times the
//! cell-averaged physical gradient when applied to coefficients.
std::vector<double> gradient_row(int offset, int ncoeff);

//! Interface-value functional of a stencil: coefficients on the average data
//! (and then gradient data) such that dot(coeffs, data) = p(xi_eval).
std::vector<double> value_functional(const StencilSpec& spec, double xi_eval);

}  // namespace detail

}  // namespace geno1d
