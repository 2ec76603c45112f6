#pragma once

#include "htx/formulations.hpp"
#include "htx/geometry.hpp"
#include "htx/postprocess_types.hpp"
#include "htx/types.hpp"

#include <vector>

namespace htx {

// Far field of u1 = D_{k1}[mu] - S_{k1}[sigma] on the standard equispaced
// observation circle.  The asymptotic kernels follow from the large-argument
// Hankel form, normalized so u1 ~ e^{i k1 |x|}/sqrt(|x|) (u1_inf + O(1/|x|)).
FarField far_field(const NodeSet& nodes, double k1, const CVector& mu,
                   const CVector& sigma, int directions = 720);

// max |a - b| over the common direction grid
double far_field_error(const FarField& a, const FarField& b);

// Region membership by winding number.
bool point_inside(const NodeSet& nodes, Vec2 p);

// Scattered exterior field u1 at points in Omega_1 and total interior field
// u2 at points in Omega_2, evaluated from the representation formulas with
// the trapezoid rule.  Points closer to the boundary than three node
// spacings are rejected.
struct NearFieldResult {
  std::vector<Complex> values;
  std::vector<bool> interior;
};
NearFieldResult near_field(const NodeSet& nodes, double k1, double k2,
                           const FieldDensities& dens, const std::vector<Vec2>& points);

void write_far_field_csv(const FarField& ff, const std::string& path);

} // namespace htx
