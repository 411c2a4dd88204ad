#include "geno1d/recon.hpp"

#include <cmath>
#include <cstdlib>

namespace geno1d {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGaussNode[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double kGaussWeight[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

double falling_factorial(int m, int l) {
  double r = 1.0;
  for (int i = 0; i < l; ++i) r *= static_cast<double>(m - i);
  return r;
}

// int_{-1/2}^{1/2} xi^n dxi
double central_moment(int n) {
  if (n % 2 == 1) return 0.0;
  return std::pow(0.5, n) / static_cast<double>(n + 1);
}

}  // namespace

double ReconPolynomial::value(double xi) const {
  double r = 0.0;
  for (int m = degree; m >= 0; --m) r = r * xi + coeffs[m];
  return r;
}

double ReconPolynomial::cell_average(int offset) const {
  const std::vector<double> row = detail::average_row(offset, degree + 1);
  double r = 0.0;
  for (int m = 0; m <= degree; ++m) r += row[m] * coeffs[m];
  return r;
}

double ReconPolynomial::cell_average_gradient(int offset) const {
  const std::vector<double> row = detail::gradient_row(offset, degree + 1);
  double r = 0.0;
  for (int m = 0; m <= degree; ++m) r += row[m] * coeffs[m];
  return r / h;
}

double eval_poly(const ReconPolynomial& poly, double xi) { return poly.value(xi); }

double cell_average_of(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int q = 0; q < 8; ++q) sum += kGaussWeight[q] * f(mid + half * kGaussNode[q]);
  return 0.5 * sum;  // divide the h factor out of the weighted half-length sum
}

namespace detail {

std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b, int n) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-300)
      throw ReconstructionError("singular constraint system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] * inv;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * x[c];
    x[r] = s / a[r * n + r];
  }
  return x;
}

std::vector<double> average_row(int offset, int ncoeff) {
  std::vector<double> row(ncoeff);
  const double xl = offset - 0.5;
  const double xr = offset + 0.5;
  double pl = xl, pr = xr;
  for (int m = 0; m < ncoeff; ++m) {
    row[m] = (pr - pl) / static_cast<double>(m + 1);
    pl *= xl;
    pr *= xr;
  }
  return row;
}

std::vector<double> gradient_row(int offset, int ncoeff) {
  std::vector<double> row(ncoeff);
  const double xl = offset - 0.5;
  const double xr = offset + 0.5;
  row[0] = 0.0;
  double pl = 1.0, pr = 1.0;
  for (int m = 1; m < ncoeff; ++m) {
    pl *= xl;
    pr *= xr;
    row[m] = pr - pl;
  }
  return row;
}

std::vector<double> value_functional(const StencilSpec& spec, double xi_eval) {
  const int n = spec.constraint_count();
  // columns of the inverse constraint matrix, assembled one rhs at a time
  std::vector<double> mat(n * n);
  int r = 0;
  for (int off : spec.offsets) {
    const std::vector<double> row = average_row(off, n);
    for (int c = 0; c < n; ++c) mat[r * n + c] = row[c];
    ++r;
  }
  for (int off : spec.gradient_offsets) {
    const std::vector<double> row = gradient_row(off, n);
    for (int c = 0; c < n; ++c) mat[r * n + c] = row[c];
    ++r;
  }

  std::vector<double> result(n);
  for (int k = 0; k < n; ++k) {
    std::vector<double> rhs(n, 0.0);
    rhs[k] = 1.0;
    const std::vector<double> coeffs = solve_dense(mat, rhs, n);
    double v = 0.0;
    for (int m = n - 1; m >= 0; --m) v = v * xi_eval + coeffs[m];
    result[k] = v;
  }
  return result;
}

}  // namespace detail

ReconPolynomial build_interp_poly(std::span<const double> averages,
                                  const StencilSpec& spec, double h) {
  if (!spec.gradient_offsets.empty())
    throw ReconstructionError("build_interp_poly: gradient constraints not allowed");
  if (averages.size() != spec.offsets.size())
    throw ReconstructionError("build_interp_poly: data/stencil size mismatch");

  const int n = static_cast<int>(spec.offsets.size());
  std::vector<double> mat(n * n);
  std::vector<double> rhs(averages.begin(), averages.end());
  for (int r = 0; r < n; ++r) {
    const std::vector<double> row = detail::average_row(spec.offsets[r], n);
    for (int c = 0; c < n; ++c) mat[r * n + c] = row[c];
  }

  ReconPolynomial poly;
  poly.degree = n - 1;
  poly.h = h;
  poly.coeffs = detail::solve_dense(std::move(mat), std::move(rhs), n);
  return poly;
}

ReconPolynomial build_hermite_poly(std::span<const double> averages,
                                   std::span<const double> gradient_averages,
                                   const StencilSpec& spec, double h) {
  if (averages.size() != spec.offsets.size() ||
      gradient_averages.size() != spec.gradient_offsets.size())
    throw ReconstructionError("build_hermite_poly: data/stencil size mismatch");

  const int n = spec.constraint_count();
  std::vector<double> mat(n * n);
  std::vector<double> rhs(n);
  int r = 0;
  for (std::size_t i = 0; i < spec.offsets.size(); ++i, ++r) {
    const std::vector<double> row = detail::average_row(spec.offsets[i], n);
    for (int c = 0; c < n; ++c) mat[r * n + c] = row[c];
    rhs[r] = averages[i];
  }
  for (std::size_t i = 0; i < spec.gradient_offsets.size(); ++i, ++r) {
    const std::vector<double> row = detail::gradient_row(spec.gradient_offsets[i], n);
    for (int c = 0; c < n; ++c) mat[r * n + c] = row[c];
    rhs[r] = gradient_averages[i] * h;  // physical gradient scaled to xi space
  }

  ReconPolynomial poly;
  poly.degree = n - 1;
  poly.h = h;
  poly.coeffs = detail::solve_dense(std::move(mat), std::move(rhs), n);
  return poly;
}

double smoothness_indicator(const ReconPolynomial& poly, int max_order) {
  if (max_order < 1)
    throw ReconstructionError("smoothness_indicator: max_order must be >= 1");
  // In local coordinates the h^{2l-1} scale factors cancel against the
  // substitution x -> xi, leaving plain integrals of squared xi-derivatives.
  double total = 0.0;
  for (int l = 1; l <= max_order && l <= poly.degree; ++l) {
    double term = 0.0;
    for (int m = l; m <= poly.degree; ++m) {
      for (int mm = l; mm <= poly.degree; ++mm) {
        const double moment = central_moment(m + mm - 2 * l);
        if (moment == 0.0) continue;
        term += poly.coeffs[m] * poly.coeffs[mm] * falling_factorial(m, l) *
                falling_factorial(mm, l) * moment;
      }
    }
    total += term;
  }
  return total;
}

std::vector<double> derive_optimal_weights(const std::vector<StencilSpec>& sub_specs,
                                           const StencilSpec& large_spec,
                                           double xi_eval) {
  if (sub_specs.empty())
    throw ReconstructionError("derive_optimal_weights: no sub-stencils");
  if (!large_spec.gradient_offsets.empty())
    throw ReconstructionError(
        "derive_optimal_weights: gradient-constrained large stencil unsupported");

  // Map every functional into the large stencil's data coordinates.
  const int ndata = static_cast<int>(large_spec.offsets.size());
  auto index_of = [&](int off) {
    for (int i = 0; i < ndata; ++i)
      if (large_spec.offsets[i] == off) return i;
    throw ReconstructionError("derive_optimal_weights: sub-stencil leaves large stencil");
  };

  const int k0 = static_cast<int>(sub_specs.size());
  std::vector<double> columns(ndata * k0, 0.0);
  for (int k = 0; k < k0; ++k) {
    if (!sub_specs[k].gradient_offsets.empty())
      throw ReconstructionError(
          "derive_optimal_weights: gradient-constrained sub-stencil unsupported");
    const std::vector<double> f = detail::value_functional(sub_specs[k], xi_eval);
    for (std::size_t i = 0; i < sub_specs[k].offsets.size(); ++i)
      columns[index_of(sub_specs[k].offsets[i]) * k0 + k] = f[i];
  }
  const std::vector<double> target = detail::value_functional(large_spec, xi_eval);

  // Least-squares solve of the (ndata x k0) system via normal equations,
  // then verify the residual: inconsistency signals a wrong stencil table.
  std::vector<double> ata(k0 * k0, 0.0);
  std::vector<double> atb(k0, 0.0);
  for (int i = 0; i < ndata; ++i) {
    for (int a = 0; a < k0; ++a) {
      atb[a] += columns[i * k0 + a] * target[i];
      for (int b = 0; b < k0; ++b)
        ata[a * k0 + b] += columns[i * k0 + a] * columns[i * k0 + b];
    }
  }
  const std::vector<double> d = detail::solve_dense(std::move(ata), std::move(atb), k0);

  for (int i = 0; i < ndata; ++i) {
    double fit = 0.0;
    for (int k = 0; k < k0; ++k) fit += columns[i * k0 + k] * d[k];
    if (std::abs(fit - target[i]) > 1e-10)
      throw ReconstructionError(
          "derive_optimal_weights: no consistent linear weights for this stencil set");
  }
  return d;
}

}  // namespace geno1d
