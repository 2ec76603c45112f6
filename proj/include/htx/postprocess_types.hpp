#pragma once

#include "htx/types.hpp"

namespace htx {

// Far-field amplitude samples u1_inf(x_hat) on equispaced observation angles.
struct FarField {
  RVector angles;    // in [0, 2 pi)
  CVector amplitude; // same length; at least 360 directions
};

} // namespace htx
