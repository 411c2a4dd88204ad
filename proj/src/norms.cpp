#include "geno1d/norms.hpp"

#include <cmath>

namespace geno1d {

ErrorReport error_norms(const CellField& numerical,
                        std::span<const double> exact_rho) {
  if (exact_rho.size() != static_cast<std::size_t>(numerical.n))
    throw UsageError("error_norms: exact/numerical size mismatch");
  ErrorReport r;
  r.n_cells = numerical.n;
  const double h = numerical.h();
  double sum1 = 0.0, sum2 = 0.0, maxv = 0.0;
  for (int j = 0; j < numerical.n; ++j) {
    const double e = std::abs(numerical.cell(j).rho - exact_rho[j]);
    sum1 += e;
    sum2 += e * e;
    maxv = std::max(maxv, e);
  }
  r.l1 = h * sum1;
  r.l2 = std::sqrt(h * sum2);
  r.linf = maxv;
  return r;
}

CellField restrict_field(const CellField& fine, int n_coarse) {
  if (n_coarse < 1 || fine.n % n_coarse != 0)
    throw UsageError("restrict_field: fine mesh must be an integer multiple");
  const int ratio = fine.n / n_coarse;
  CellField coarse(n_coarse, fine.x_min, fine.x_max, fine.n_ghost);
  for (int j = 0; j < n_coarse; ++j) {
    ConservedState acc{0.0, 0.0, 0.0};
    for (int i = 0; i < ratio; ++i) {
      const ConservedState& w = fine.cell(j * ratio + i);
      acc.rho += w.rho;
      acc.mom += w.mom;
      acc.E += w.E;
    }
    coarse.cell(j) = {acc.rho / ratio, acc.mom / ratio, acc.E / ratio};
  }
  return coarse;
}

std::vector<double> density_of(const CellField& field) {
  std::vector<double> rho(field.n);
  for (int j = 0; j < field.n; ++j) rho[j] = field.cell(j).rho;
  return rho;
}

}  // namespace geno1d
