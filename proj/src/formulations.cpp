#include "htx/formulations.hpp"

#include <stdexcept>

namespace htx {

Formulation formulation_by_name(const std::string& name) {
  if (name == "sk14") return Formulation::SK14;
  if (name == "sk15") return Formulation::SK15;
  if (name == "fk16") return Formulation::FK16;
  if (name == "skr-lp") return Formulation::SKR_LP;
  if (name == "skr-ps") return Formulation::SKR_PS;
  throw std::invalid_argument("unknown formulation: " + name);
}

std::string formulation_name(Formulation f) {
  switch (f) {
    case Formulation::SK14: return "sk14";
    case Formulation::SK15: return "sk15";
    case Formulation::FK16: return "fk16";
    case Formulation::SKR_LP: return "skr-lp";
    case Formulation::SKR_PS: return "skr-ps";
  }
  return "?";
}

Vec2 TransmissionConfig::incident_direction() const {
  if (direction) return direction->normalized();
  // benchmark defaults: vertical incidence for the circle, 45 degrees into
  // the fourth quadrant for the kite, horizontal for the cavity
  if (geometry == "kite") return Vec2(std::sqrt(0.5), -std::sqrt(0.5));
  if (geometry == "cavity") return Vec2(1.0, 0.0);
  return Vec2(0.0, -1.0);
}

Complex kappa1_default(const std::string& geometry, double omega, double nu,
                       double k1, double k2) {
  double eps;
  if (geometry == "circle") eps = 4.0;
  else if (nu == 1.0) eps = omega / 4.0;
  else eps = omega;
  return Complex(0.5 * (k1 + k2), eps);
}

PlaneWaveTrace plane_wave_trace(const NodeSet& nodes, Complex k1, Vec2 d) {
  if (std::abs(d.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("plane_wave_trace: direction must be unit length");
  const int m = nodes.size();
  PlaneWaveTrace tr{CVector(m), CVector(m)};
  for (int j = 0; j < m; ++j) {
    Complex u = std::exp(kI * k1 * d.dot(nodes.x.col(j)));
    tr.value[j] = u;
    tr.normal_derivative[j] = kI * k1 * d.dot(nodes.normal.col(j)) * u;
  }
  return tr;
}

OperatorSet build_operator_set(const NodeSet& nodes, const TransmissionConfig& cfg) {
  OperatorSet ops;
  OperatorFamily f1 = assemble_family(nodes, Wavenumber(Complex(cfg.k1(), 0.0)));
  OperatorFamily f2 = assemble_family(nodes, Wavenumber(Complex(cfg.k2(), 0.0)));
  ops.S1 = std::move(f1.S);
  ops.D1 = std::move(f1.D);
  ops.Ds1 = std::move(f1.Dstar);
  ops.N1 = std::move(f1.N);
  ops.S2 = std::move(f2.S);
  ops.D2 = std::move(f2.D);
  ops.Ds2 = std::move(f2.Dstar);
  ops.N2 = std::move(f2.N);

  if (cfg.formulation == Formulation::SKR_LP || cfg.formulation == Formulation::SKR_PS) {
    Complex kap = cfg.kappa1 ? *cfg.kappa1
                             : kappa1_default(cfg.geometry, cfg.omega, cfg.nu(),
                                              cfg.k1(), cfg.k2());
    if (!(kap.real() > 0.0) || !(kap.imag() > 0.0))
      throw std::invalid_argument("SKR formulations need kappa1 = kappa + i eps, kappa, eps > 0");
    ops.kappa1 = kap;
    if (cfg.formulation == Formulation::SKR_LP) {
      OperatorFamily fr = assemble_family(nodes, Wavenumber(kap));
      ops.Sreg = std::move(fr.S);
      ops.Nreg = std::move(fr.N);
    } else {
      ops.Sreg = assemble_sigma(nodes, OperatorKind::SigmaS, Wavenumber(kap)).mat;
      ops.Nreg = assemble_sigma(nodes, OperatorKind::SigmaN, Wavenumber(kap)).mat;
    }
    ops.has_reg = true;
  }
  return ops;
}

CVector BlockSystem::apply(const CVector& v) const {
  const int m = 2 * n;
  CVector out(2 * m);
  out.head(m) = A11 * v.head(m) + A12 * v.tail(m);
  out.tail(m) = A21 * v.head(m) + A22 * v.tail(m);
  return out;
}

CMatrix BlockSystem::full() const {
  const int m = 2 * n;
  CMatrix A(2 * m, 2 * m);
  A.topLeftCorner(m, m) = A11;
  A.topRightCorner(m, m) = A12;
  A.bottomLeftCorner(m, m) = A21;
  A.bottomRightCorner(m, m) = A22;
  return A;
}

BlockSystem assemble_formulation(const TransmissionConfig& cfg, const NodeSet& nodes,
                                 const OperatorSet& ops) {
  const int m = nodes.size();
  const double nu = cfg.nu();
  const double inv_nu = 1.0 / nu;
  const CMatrix I = CMatrix::Identity(m, m);
  PlaneWaveTrace inc = plane_wave_trace(nodes, Complex(cfg.k1(), 0.0),
                                        cfg.incident_direction());

  BlockSystem sys;
  sys.formulation = cfg.formulation;
  sys.n = nodes.n;
  sys.rhs.resize(2 * m);

  switch (cfg.formulation) {
    case Formulation::SK14:
      sys.A11 = I + ops.D2 - ops.D1;
      sys.A12 = ops.S1 - inv_nu * ops.S2;
      sys.A21 = ops.N2 - ops.N1;
      sys.A22 = 0.5 * (inv_nu + 1.0) * I + ops.Ds1 - inv_nu * ops.Ds2;
      sys.rhs << inc.value, inc.normal_derivative;
      break;
    case Formulation::SK15:
      sys.A11 = 0.5 * (inv_nu + 1.0) * I + ops.D2 - inv_nu * ops.D1;
      sys.A12 = inv_nu * (ops.S1 - ops.S2);
      sys.A21 = ops.N2 - ops.N1;
      sys.A22 = 0.5 * (inv_nu + 1.0) * I + ops.Ds1 - inv_nu * ops.Ds2;
      sys.rhs << inv_nu * inc.value, inc.normal_derivative;
      break;
    case Formulation::FK16:
      sys.A11 = -(ops.D1 + ops.D2);
      sys.A12 = ops.S1 + inv_nu * ops.S2;
      sys.A21 = -(ops.N1 + nu * ops.N2);
      sys.A22 = ops.Ds1 + ops.Ds2;
      sys.rhs << inc.value, inc.normal_derivative;
      break;
    case Formulation::SKR_LP:
    case Formulation::SKR_PS: {
      if (!ops.has_reg)
        throw std::invalid_argument("assemble_formulation: operator set lacks regularizers");
      sys.regularized = true;
      sys.r11 = nu / (1.0 + nu);
      sys.r22 = 1.0 / (1.0 + nu);
      sys.R12 = (-2.0 / (1.0 + nu)) * ops.Sreg;
      sys.R21 = (2.0 * nu / (1.0 + nu)) * ops.Nreg;
      CMatrix Dsum = ops.D1 + ops.D2;
      CMatrix Ssum = ops.S1 + inv_nu * ops.S2;
      CMatrix DsSum = ops.Ds1 + ops.Ds2;
      CMatrix Nsum = ops.N1 + nu * ops.N2;
      sys.A11 = 0.5 * I - ops.D2 + sys.r11 * Dsum - Ssum * sys.R21;
      sys.A12 = inv_nu * ops.S2 + Dsum * sys.R12 - sys.r22 * Ssum;
      sys.A21 = -nu * ops.N2 + sys.r11 * Nsum - DsSum * sys.R21;
      sys.A22 = 0.5 * I + ops.Ds2 + Nsum * sys.R12 - sys.r22 * DsSum;
      sys.rhs << -inc.value, -inc.normal_derivative;
      break;
    }
  }
  return sys;
}

BlockSystem assemble_formulation(const TransmissionConfig& cfg, const NodeSet& nodes) {
  return assemble_formulation(cfg, nodes, build_operator_set(nodes, cfg));
}

FieldDensities recover_densities(const BlockSystem& sys, const CVector& solution,
                                 const PlaneWaveTrace& incident, double nu) {
  const int m = 2 * sys.n;
  FieldDensities fd;
  CVector first = solution.head(m), second = solution.tail(m);
  if (!sys.regularized) {
    // direct unknowns are the total exterior traces (u, du/dn)
    fd.mu = first - incident.value;
    fd.sigma = second - incident.normal_derivative;
    fd.mu2 = first;
    fd.sigma2 = second / nu;
  } else {
    CVector alpha = sys.r11 * first + sys.R12 * second;
    CVector beta = sys.R21 * first + sys.r22 * second;
    fd.mu = alpha;
    fd.sigma = beta;
    fd.mu2 = alpha - first;
    fd.sigma2 = (beta - second) / nu;
  }
  return fd;
}

} // namespace htx
