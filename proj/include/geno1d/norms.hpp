#pragma once

#include <span>
#include <string>
#include <vector>

#include "geno1d/solver.hpp"

namespace geno1d {

//! Density-error norms of one run.
struct ErrorReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  int n_cells = 0;
  std::string scheme;
};

//! L1 = h sum|e|, L2 = sqrt(h sum e^2), Linf = max|e| of the density error
//! against exact cell averages.
ErrorReport error_norms(const CellField& numerical,
                        std::span<const double> exact_rho);

//! Conservative restriction of a fine field onto n_coarse cells; the fine
//! cell count must be an integer multiple of n_coarse.
CellField restrict_field(const CellField& fine, int n_coarse);

std::vector<double> density_of(const CellField& field);

}  // namespace geno1d
