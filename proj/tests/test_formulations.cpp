#include "doctest.h"

#include "htx/formulations.hpp"
#include "htx/gmres.hpp"

#include <Eigen/Eigenvalues>

using namespace htx;

TEST_CASE("plane wave traces") {
  NodeSet s = sample(make_circle(), 16);
  const Complex k1(3.0, 0.0);
  Vec2 d(0.0, -1.0);
  PlaneWaveTrace tr = plane_wave_trace(s, k1, d);
  for (int j = 0; j < s.size(); ++j) {
    CHECK(std::abs(std::abs(tr.value[j]) - 1.0) < 1e-14); // unimodular for real k1
  }
  // node at t=0 has normal (1,0) orthogonal to d: zero normal derivative
  CHECK(std::abs(tr.normal_derivative[0]) < 1e-13);
  CHECK_THROWS_AS((void)plane_wave_trace(s, k1, Vec2(0.0, -2.0)), std::invalid_argument);
}

TEST_CASE("default incidence directions per geometry") {
  TransmissionConfig c;
  c.geometry = "circle";
  CHECK((c.incident_direction() - Vec2(0, -1)).norm() < 1e-15);
  c.geometry = "kite";
  CHECK((c.incident_direction() - Vec2(std::sqrt(0.5), -std::sqrt(0.5))).norm() < 1e-15);
  c.geometry = "cavity";
  CHECK((c.incident_direction() - Vec2(1, 0)).norm() < 1e-15);
}

TEST_CASE("kappa1 recipes") {
  double k1 = 16, k2 = 16 * std::sqrt(2.0);
  Complex kap = kappa1_default("circle", 16, 1.0, k1, k2);
  CHECK(kap.real() == doctest::Approx(0.5 * (16 + 16 * std::sqrt(2.0))));
  CHECK(kap.imag() == doctest::Approx(4.0));

  kap = kappa1_default("kite", 32, 1.0, 32, 64);
  CHECK(kap.real() == doctest::Approx(48.0));
  CHECK(kap.imag() == doctest::Approx(8.0)); // omega/4

  kap = kappa1_default("kite", 8, 1.0 / 16.0, 8, 32);
  CHECK(kap.real() == doctest::Approx(20.0));
  CHECK(kap.imag() == doctest::Approx(8.0)); // omega
}

TEST_CASE("sk14 and sk15 coincide for nu = 1") {
  TransmissionConfig cfg;
  cfg.geometry = "kite";
  cfg.omega = 4;
  cfg.eps2 = 2;
  cfg.n = 24;
  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  cfg.formulation = Formulation::SK14;
  OperatorSet ops = build_operator_set(nodes, cfg);
  BlockSystem a = assemble_formulation(cfg, nodes, ops);
  cfg.formulation = Formulation::SK15;
  BlockSystem b = assemble_formulation(cfg, nodes, ops);
  CHECK((a.A11 - b.A11).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.A12 - b.A12).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.A21 - b.A21).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.A22 - b.A22).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((a.rhs - b.rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("skr right-hand side carries the negated incident traces") {
  TransmissionConfig cfg;
  cfg.geometry = "circle";
  cfg.omega = 2;
  cfg.eps2 = 2;
  cfg.formulation = Formulation::SKR_LP;
  cfg.n = 16;
  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  BlockSystem sys = assemble_formulation(cfg, nodes);
  PlaneWaveTrace inc = plane_wave_trace(nodes, Complex(cfg.k1(), 0.0),
                                        cfg.incident_direction());
  CHECK((sys.rhs.head(nodes.size()) + inc.value).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((sys.rhs.tail(nodes.size()) + inc.normal_derivative).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("skr formulations reject real kappa1") {
  TransmissionConfig cfg;
  cfg.geometry = "circle";
  cfg.omega = 2;
  cfg.eps2 = 2;
  cfg.formulation = Formulation::SKR_LP;
  cfg.n = 16;
  cfg.kappa1 = Complex(2.0, 0.0);
  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  CHECK_THROWS_AS((void)build_operator_set(nodes, cfg), std::invalid_argument);
}

TEST_CASE("formulation names round trip") {
  for (const char* name : {"sk14", "sk15", "fk16", "skr-lp", "skr-ps"})
    CHECK(formulation_name(formulation_by_name(name)) == name);
  CHECK_THROWS_AS((void)formulation_by_name("bogus"), std::invalid_argument);
}

TEST_CASE("skr diagonal blocks are identity plus decaying perturbation") {
  TransmissionConfig cfg;
  cfg.geometry = "circle";
  cfg.omega = 8;
  cfg.eps2 = 2;
  cfg.formulation = Formulation::SKR_LP;
  cfg.n = 64;
  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  BlockSystem sys = assemble_formulation(cfg, nodes);
  CMatrix I = CMatrix::Identity(nodes.size(), nodes.size());
  double s11 = operator_difference_decay(sys.A11, I, nodes.n);
  double s22 = operator_difference_decay(sys.A22, I, nodes.n);
  CHECK(s11 < -1.0);
  CHECK(s22 < -1.0);
}

TEST_CASE("spectral clustering of the block systems") {
  auto eigenvalues = [](const TransmissionConfig& cfg) {
    NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
    BlockSystem sys = assemble_formulation(cfg, nodes);
    Eigen::ComplexEigenSolver<CMatrix> es(sys.full(), false);
    return CVector(es.eigenvalues());
  };
  auto fraction_near = [](const CVector& ev, Complex center, double radius) {
    int cnt = 0;
    for (int i = 0; i < ev.size(); ++i)
      if (std::abs(ev[i] - center) <= radius) ++cnt;
    return double(cnt) / double(ev.size());
  };

  SUBCASE("skr-lp accumulates at 1") {
    // The number of eigenvalues away from 1 stays fixed while the spectrum
    // grows with n (accumulation at 1); the within-0.1 fraction is 0.70 at
    // n = 64 and crosses 0.8 by n = 96 for this configuration.
    TransmissionConfig cfg;
    cfg.geometry = "circle";
    cfg.omega = 8;
    cfg.eps2 = 2;
    cfg.formulation = Formulation::SKR_LP;
    cfg.n = 64;
    CVector ev64 = eigenvalues(cfg);
    double f64 = fraction_near(ev64, Complex(1, 0), 0.1);
    CHECK(f64 > 0.65);
    cfg.n = 96;
    CVector ev96 = eigenvalues(cfg);
    CHECK(fraction_near(ev96, Complex(1, 0), 0.1) > 0.8);
    int out64 = int(std::lround((1 - f64) * double(ev64.size())));
    int out96 = int(std::lround(
        (1 - fraction_near(ev96, Complex(1, 0), 0.1)) * double(ev96.size())));
    CHECK(std::abs(out96 - out64) <= 10);
  }

  SUBCASE("sk14 shows two clusters for nu = 1/4, sk15 only one") {
    TransmissionConfig cfg;
    cfg.geometry = "circle";
    cfg.omega = 8;
    cfg.eps2 = 4;
    cfg.polarization = Polarization::H; // nu = 1/4, (1/nu + 1)/2 = 2.5
    cfg.n = 64;
    cfg.formulation = Formulation::SK14;
    CVector ev14 = eigenvalues(cfg);
    CHECK(fraction_near(ev14, Complex(1, 0), 0.15) > 0.25);
    CHECK(fraction_near(ev14, Complex(2.5, 0), 0.15) > 0.25);

    cfg.formulation = Formulation::SK15;
    CVector ev15 = eigenvalues(cfg);
    CHECK(fraction_near(ev15, Complex(2.5, 0), 0.15) > 0.5);
    CHECK(fraction_near(ev15, Complex(1, 0), 0.15) < 0.05);
  }
}

TEST_CASE("skr-lp and skr-ps blocks differ by a smoother operator") {
  TransmissionConfig cfg;
  cfg.geometry = "circle";
  cfg.omega = 8;
  cfg.eps2 = 2;
  cfg.n = 64;
  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  cfg.formulation = Formulation::SKR_LP;
  BlockSystem lp = assemble_formulation(cfg, nodes);
  cfg.formulation = Formulation::SKR_PS;
  BlockSystem ps = assemble_formulation(cfg, nodes);

  CMatrix Z = CMatrix::Zero(nodes.size(), nodes.size());
  double slope_b12 = operator_difference_decay(ps.A12, Z, nodes.n);
  double slope_diff = operator_difference_decay(ps.A12, lp.A12, nodes.n);
  // B12 - A12 = -(2/(1+nu)) (D1 + D2)(sigma^S - S_kappa1) decays at least two
  // orders faster than B12 itself
  CHECK(slope_diff <= slope_b12 - 2.0 + 0.3);
}
