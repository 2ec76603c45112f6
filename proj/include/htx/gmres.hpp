#pragma once

#include "htx/types.hpp"

#include <functional>
#include <vector>

namespace htx {

// Unrestarted complex GMRES with modified Gram-Schmidt plus one
// reorthogonalization pass.  Iteration count equals the Krylov dimension at
// convergence; this is the figure reported against the benchmark tables.
struct KrylovReport {
  int iterations = 0;
  std::vector<double> residuals; // relative residual after each iteration
  CVector solution;
  bool converged = false;
  bool breakdown = false; // happy breakdown: exact solution in the Krylov space
  std::vector<CVector> basis; // filled only when requested
};

using MatVec = std::function<CVector(const CVector&)>;

// max_iter < 0 means "cap at the system dimension".
KrylovReport gmres_solve(const MatVec& apply, const CVector& rhs, double tol,
                         int max_iter = -1, bool keep_basis = false);

} // namespace htx
