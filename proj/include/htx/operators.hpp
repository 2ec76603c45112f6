#pragma once

#include "htx/geometry.hpp"
#include "htx/types.hpp"

namespace htx {

// Complex wavenumber with Re >= 0, Im >= 0, not both zero.
struct Wavenumber {
  Complex value;
  explicit Wavenumber(Complex k);
};

enum class OperatorKind { S, D, Dstar, N, SigmaS, SigmaN };

// One discretized boundary operator on the 2n Nystrom nodes.  The matrix acts
// on nodal density values and returns operator values at the same nodes.
struct OperatorMatrix {
  OperatorKind kind;
  Complex k;
  CMatrix mat;
};

OperatorMatrix assemble_single_layer(const NodeSet& nodes, Wavenumber k);
OperatorMatrix assemble_double_layer(const NodeSet& nodes, Wavenumber k);
OperatorMatrix assemble_adjoint_double_layer(const NodeSet& nodes, Wavenumber k);
OperatorMatrix assemble_hypersingular(const NodeSet& nodes, Wavenumber k);

// Fourier-multiplier operators with the principal symbols
//   p^N(xi) = -(1/2) sqrt(xi^2 - kappa1^2),  p^S(xi) = 1/(2 sqrt(xi^2 - kappa1^2)),
// square root taken with negative imaginary part so Im p^N, Im p^S > 0.
// Requires Re kappa1 > 0 and Im kappa1 > 0.
OperatorMatrix assemble_sigma(const NodeSet& nodes, OperatorKind kind, Wavenumber kappa1);

Complex symbol_p_s(double xi, Complex kappa1);
Complex symbol_p_n(double xi, Complex kappa1);

// All dense operators for one (nodes, k) pair, assembled in a single pass so
// the Bessel evaluations are shared.
struct OperatorFamily {
  CMatrix S, D, Dstar, N;
};
OperatorFamily assemble_family(const NodeSet& nodes, Wavenumber k);

// Least-squares slope of log ||(A - B) e^{i m t}|| versus log m over
// m in [n/8, n/2]; the property suite's smoothing-order estimator.
double operator_difference_decay(const CMatrix& A, const CMatrix& B, int n);

} // namespace htx
