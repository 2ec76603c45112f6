#pragma once

#include "htx/types.hpp"

#include <functional>
#include <string>

namespace htx {

// Smooth 2*pi-periodic boundary with analytic derivatives up to third order.
// Third derivatives feed the diagonal limits of the hypersingular kernel
// split, which involve curvature derivatives.
struct ParamCurve {
  std::string name;
  std::function<Vec2(double)> position;
  std::function<Vec2(double)> d1;
  std::function<Vec2(double)> d2;
  std::function<Vec2(double)> d3;
};

ParamCurve make_circle();
ParamCurve make_kite();
ParamCurve make_cavity();
ParamCurve curve_by_name(const std::string& name); // "circle" | "kite" | "cavity"

// Equispaced nodes t_j = pi j / n, j = 0..2n-1, with cached kinematics.
// Normals are unit and point out of the scatterer regardless of the
// parametrization's orientation (a signed-area check fixes the sign).
struct NodeSet {
  int n = 0; // half node count; 2n nodes total
  RVector t;
  Eigen::Matrix2Xd x, xp, xpp, xppp;
  RVector jac;            // |x'(t_j)|
  Eigen::Matrix2Xd normal;
  double orientation = 1; // +1 if the parametrization runs counterclockwise

  int size() const { return 2 * n; }
};

NodeSet sample(const ParamCurve& curve, int n);

} // namespace htx
