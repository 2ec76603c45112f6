#pragma once

#include "htx/geometry.hpp"
#include "htx/operators.hpp"
#include "htx/types.hpp"

#include <optional>
#include <string>

namespace htx {

enum class Formulation { SK14, SK15, FK16, SKR_LP, SKR_PS };

Formulation formulation_by_name(const std::string& name); // sk14 sk15 fk16 skr-lp skr-ps
std::string formulation_name(Formulation f);

enum class Polarization { E, H };

struct TransmissionConfig {
  std::string geometry = "circle";
  Formulation formulation = Formulation::SK15;
  double omega = 8.0;
  double eps1 = 1.0;
  double eps2 = 2.0;
  Polarization polarization = Polarization::E;
  std::optional<double> nu_override;    // explicit contrast constant
  std::optional<Vec2> direction;        // defaults per geometry
  std::optional<Complex> kappa1;        // defaults per recipe below
  double tol = 1e-8;
  int n = 32; // half node count; 2n points, 4n unknowns

  double k1() const { return omega * std::sqrt(eps1); }
  double k2() const { return omega * std::sqrt(eps2); }
  double nu() const {
    if (nu_override) return *nu_override;
    return polarization == Polarization::E ? 1.0 : eps1 / eps2;
  }
  Vec2 incident_direction() const;
};

// kappa1 recipes used by the benchmark tables: kappa = (k1+k2)/2 and
// eps = 4 (circle), omega/4 (kite/cavity with nu = 1), omega otherwise.
Complex kappa1_default(const std::string& geometry, double omega, double nu,
                       double k1, double k2);

// u^inc = e^{i k1 d.x} and its normal derivative at the nodes.
struct PlaneWaveTrace {
  CVector value, normal_derivative;
};
PlaneWaveTrace plane_wave_trace(const NodeSet& nodes, Complex k1, Vec2 d);

// Every dense operator one of the formulations may need at a fixed
// (nodes, k1, k2) pair; regularizers are filled only when requested.
struct OperatorSet {
  CMatrix S1, D1, Ds1, N1;
  CMatrix S2, D2, Ds2, N2;
  // SKR regularizers at kappa1: layer-potential or principal-symbol flavor
  CMatrix Sreg, Nreg;
  bool has_reg = false;
  Complex kappa1;
};
OperatorSet build_operator_set(const NodeSet& nodes, const TransmissionConfig& cfg);

// One assembled 2x2 block system with its right-hand side.  For SKR systems
// the regularizer blocks are retained so solved densities can be mapped to
// the potentials of the representation formulas.
struct BlockSystem {
  Formulation formulation;
  int n = 0;
  CMatrix A11, A12, A21, A22;
  CVector rhs; // stacked, length 4n
  // regularizer data (SKR only): alpha = r11 a + R12 b, beta = R21 a + r22 b
  bool regularized = false;
  double r11 = 0, r22 = 0;
  CMatrix R12, R21;

  CVector apply(const CVector& v) const;
  CMatrix full() const;
};

BlockSystem assemble_formulation(const TransmissionConfig& cfg, const NodeSet& nodes,
                                 const OperatorSet& ops);
BlockSystem assemble_formulation(const TransmissionConfig& cfg, const NodeSet& nodes);

// Densities (mu, sigma) of the radiating representation u1 = D1[mu] - S1[sigma]
// and (mu2, sigma2) of the interior one u2 = -D2[mu2] + S2[sigma2], recovered
// from a solved system.
struct FieldDensities {
  CVector mu, sigma;   // exterior scattered
  CVector mu2, sigma2; // interior total
};
FieldDensities recover_densities(const BlockSystem& sys, const CVector& solution,
                                 const PlaneWaveTrace& incident, double nu);

} // namespace htx
