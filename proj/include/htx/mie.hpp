#pragma once

#include "htx/postprocess_types.hpp"
#include "htx/types.hpp"

#include <vector>

namespace htx {

// Separation-of-variables reference solution for the transmission problem on
// a circle: the primary correctness oracle for circular geometries.
// Conventions: scattered field u1 = sum alpha_|m| H1_|m|(k1 rho) e^{im phi},
// interior total field u2 = sum gamma_|m| J_|m|(k2 rho) e^{im phi}, where
// phi is the polar angle measured from the incidence direction.
struct MieSolution {
  int truncation = 0;          // M: modes -M..M
  std::vector<Complex> alpha;  // scattered coefficients, index |m|
  std::vector<Complex> gamma;  // interior coefficients, index |m|
  std::vector<double> mode_condition; // 2x2 condition estimate per mode
  double radius = 1.0;
  double k1 = 0, k2 = 0, nu = 1.0;
  double theta_d = 0; // incidence angle
};

MieSolution mie_solve(double radius, double omega, double eps1, double eps2,
                      double nu, Vec2 direction);

FarField mie_far_field(const MieSolution& sol, int directions);

// scattered field u1 at an exterior point / total field u2 at an interior one
Complex mie_exterior(const MieSolution& sol, Vec2 point);
Complex mie_interior(const MieSolution& sol, Vec2 point);

} // namespace htx
