#include "htx/driver.hpp"

#include "htx/quadrature.hpp"
#include "htx/specfun.hpp"

#include <Eigen/LU>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>

namespace htx {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Formulation kTableFormulations[] = {Formulation::SK15, Formulation::FK16,
                                    Formulation::SKR_LP, Formulation::SKR_PS};

} // namespace

FarField reference_far_field(const TransmissionConfig& cfg, int directions) {
  if (cfg.geometry == "circle") {
    MieSolution mie = mie_solve(1.0, cfg.omega, cfg.eps1, cfg.eps2, cfg.nu(),
                                cfg.incident_direction());
    return mie_far_field(mie, directions);
  }
  TransmissionConfig ref = cfg;
  ref.formulation = Formulation::SK15;
  ref.n = 2 * cfg.n;
  ref.tol = 1e-12;
  RunOptions opt;
  opt.reference = ReferenceKind::None;
  opt.directions = directions;
  return run_single(ref, opt).farfield;
}

SolveReport run_single(const TransmissionConfig& cfg, const RunOptions& opt) {
  SolveReport rep;
  rep.config = cfg;
  rep.unknowns = 4 * cfg.n;

  NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
  auto t0 = Clock::now();
  OperatorSet ops = build_operator_set(nodes, cfg);
  BlockSystem sys = assemble_formulation(cfg, nodes, ops);
  rep.assemble_seconds = seconds_since(t0);
  if (sys.regularized) rep.kappa1_used = ops.kappa1;

  MatVec apply = [&sys](const CVector& v) { return sys.apply(v); };
  t0 = Clock::now();
  rep.krylov = gmres_solve(apply, sys.rhs, cfg.tol);
  rep.solve_seconds = seconds_since(t0);
  if (!rep.krylov.converged)
    throw UnconvergedError("GMRES did not reach the requested tolerance",
                           rep.krylov.residuals);

  if (opt.time_matvec) {
    CVector probe = sys.rhs;
    int reps = 0;
    auto tm = Clock::now();
    do {
      probe = sys.apply(probe);
      double nrm = probe.norm();
      if (nrm > 0) probe /= nrm;
      ++reps;
    } while (seconds_since(tm) < 0.25 || reps < 5);
    rep.matvec_seconds = seconds_since(tm) / reps;
  }

  if (opt.check_direct) {
    CMatrix A = sys.full();
    CVector direct = A.partialPivLu().solve(sys.rhs);
    double scale = direct.cwiseAbs().maxCoeff();
    rep.direct_gap = (rep.krylov.solution - direct).cwiseAbs().maxCoeff() / scale;
  }

  PlaneWaveTrace inc = plane_wave_trace(nodes, Complex(cfg.k1(), 0.0),
                                        cfg.incident_direction());
  rep.densities = recover_densities(sys, rep.krylov.solution, inc, cfg.nu());
  rep.farfield = far_field(nodes, cfg.k1(), rep.densities.mu, rep.densities.sigma,
                           opt.directions);

  switch (opt.reference) {
    case ReferenceKind::None:
      break;
    case ReferenceKind::Mie:
    case ReferenceKind::Refined:
    case ReferenceKind::Auto: {
      FarField ref = reference_far_field(cfg, opt.directions);
      rep.eps_inf = far_field_error(rep.farfield, ref);
      break;
    }
  }
  return rep;
}

std::vector<TableRowResult> run_table(int id, const TableRunOptions& opt) {
  const ReferenceTable& table = reference_table(id);
  std::vector<TableRowResult> rows;

  std::ofstream csv;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
    csv.open(opt.out_dir + "/table" + std::to_string(id) + ".csv");
    csv << "geometry,omega,eps1,eps2,nu,unknowns,formulation,iterations,eps_inf,"
           "ref_iterations,iter_ok\n";
  }

  for (const ReferenceRow& ref : table.rows) {
    TableRowResult row;
    row.ref = ref;
    if (ref.omega > opt.max_omega) {
      row.skipped = true;
      rows.push_back(row);
      if (opt.log)
        (*opt.log) << "table " << id << ": skipping omega=" << ref.omega
                   << " (over --max-omega)\n";
      continue;
    }

    TransmissionConfig base;
    base.geometry = ref.geometry;
    base.omega = ref.omega;
    base.eps1 = ref.eps1;
    base.eps2 = ref.eps2;
    base.polarization = ref.nu_is_ratio ? Polarization::H : Polarization::E;
    base.tol = table.tol;
    base.n = ref.unknowns / 4;

    // one reference far field and one operator set per row, shared by all
    // formulations
    FarField reffield;
    if (opt.with_reference) reffield = reference_far_field(base, 720);

    NodeSet nodes = sample(curve_by_name(base.geometry), base.n);
    TransmissionConfig cfg_lp = base;
    cfg_lp.formulation = Formulation::SKR_LP;
    OperatorSet ops = build_operator_set(nodes, cfg_lp); // includes LP regularizers
    OperatorSet ops_ps;
    {
      TransmissionConfig cfg_ps = base;
      cfg_ps.formulation = Formulation::SKR_PS;
      Complex kap = kappa1_default(base.geometry, base.omega, base.nu(), base.k1(),
                                   base.k2());
      ops_ps.kappa1 = kap;
      ops_ps.Sreg = assemble_sigma(nodes, OperatorKind::SigmaS, Wavenumber(kap)).mat;
      ops_ps.Nreg = assemble_sigma(nodes, OperatorKind::SigmaN, Wavenumber(kap)).mat;
      ops_ps.has_reg = true;
    }

    std::vector<Formulation> forms(std::begin(kTableFormulations),
                                   std::end(kTableFormulations));
    if (ref.it_sk14 >= 0) forms.push_back(Formulation::SK14);

    PlaneWaveTrace inc = plane_wave_trace(nodes, Complex(base.k1(), 0.0),
                                          base.incident_direction());

    for (Formulation f : forms) {
      TransmissionConfig cfg = base;
      cfg.formulation = f;
      const OperatorSet* use = &ops;
      OperatorSet merged;
      if (f == Formulation::SKR_PS) {
        merged.S1 = ops.S1; merged.D1 = ops.D1; merged.Ds1 = ops.Ds1; merged.N1 = ops.N1;
        merged.S2 = ops.S2; merged.D2 = ops.D2; merged.Ds2 = ops.Ds2; merged.N2 = ops.N2;
        merged.Sreg = ops_ps.Sreg; merged.Nreg = ops_ps.Nreg;
        merged.kappa1 = ops_ps.kappa1;
        merged.has_reg = true;
        use = &merged;
      }
      BlockSystem sys = assemble_formulation(cfg, nodes, *use);
      KrylovReport kr = gmres_solve([&sys](const CVector& v) { return sys.apply(v); },
                                    sys.rhs, cfg.tol);
      TableCell cell;
      cell.iterations = kr.iterations;
      if (opt.with_reference) {
        FieldDensities fd = recover_densities(sys, kr.solution, inc, cfg.nu());
        FarField ff = far_field(nodes, cfg.k1(), fd.mu, fd.sigma, 720);
        cell.eps_inf = far_field_error(ff, reffield);
      }
      switch (f) {
        case Formulation::SK15: cell.ref_iterations = ref.it_sk15; break;
        case Formulation::FK16: cell.ref_iterations = ref.it_fk16; break;
        case Formulation::SKR_LP: cell.ref_iterations = ref.it_skr_lp; break;
        case Formulation::SKR_PS: cell.ref_iterations = ref.it_skr_ps; break;
        case Formulation::SK14: cell.ref_iterations = ref.it_sk14; break;
      }
      int slack = std::max(3, int(std::lround(0.2 * cell.ref_iterations)));
      cell.iter_ok = std::abs(cell.iterations - cell.ref_iterations) <= slack;
      row.cells[f] = cell;

      if (csv.is_open()) {
        csv << ref.geometry << ',' << ref.omega << ',' << ref.eps1 << ',' << ref.eps2
            << ',' << base.nu() << ',' << ref.unknowns << ',' << formulation_name(f)
            << ',' << cell.iterations << ',' << cell.eps_inf << ','
            << cell.ref_iterations << ',' << (cell.iter_ok ? 1 : 0) << '\n';
      }
      if (opt.log) {
        (*opt.log) << "table " << id << " " << ref.geometry << " omega=" << ref.omega
                   << " unknowns=" << ref.unknowns << " " << formulation_name(f)
                   << ": iters=" << cell.iterations << " (ref " << cell.ref_iterations
                   << (cell.iter_ok ? ", ok" : ", OFF") << ")";
        if (opt.with_reference) (*opt.log) << " eps_inf=" << cell.eps_inf;
        (*opt.log) << "\n";
      }
    }
    rows.push_back(std::move(row));
  }

  if (!opt.out_dir.empty()) {
    // archive the fully resolved run configuration next to the CSV
    std::ofstream j(opt.out_dir + "/table" + std::to_string(id) + ".config.json");
    j << "{\n  \"table\": " << id << ",\n  \"tol\": " << table.tol
      << ",\n  \"max_omega\": " << opt.max_omega << ",\n  \"directions\": 720,\n"
      << "  \"formulations\": [\"sk15\", \"fk16\", \"skr-lp\", \"skr-ps\"],\n"
      << "  \"kappa1_rule\": \"(k1+k2)/2 + i*(circle: 4, nu=1: omega/4, else omega)\"\n}\n";
  }
  return rows;
}

// ---- property suite --------------------------------------------------------

namespace {

void push(std::vector<PropertyResult>& out, std::ostream* log, std::string module,
          std::string name, bool pass, double observed, double required,
          std::string note = "") {
  PropertyResult r{std::move(module), std::move(name), pass, observed, required,
                   std::move(note)};
  if (log) {
    (*log) << "{\"module\":\"" << r.module << "\",\"property\":\"" << r.name
           << "\",\"pass\":" << (pass ? "true" : "false") << ",\"observed\":" << observed
           << ",\"required\":" << required;
    if (!r.note.empty()) (*log) << ",\"note\":\"" << r.note << "\"";
    (*log) << "}\n";
  }
  out.push_back(std::move(r));
}

} // namespace

std::vector<PropertyResult> run_properties(std::ostream* log) {
  std::vector<PropertyResult> out;

  // specfun: recurrence and Wronskian residuals on a fixed grid
  {
    double worst = 0;
    for (Complex z : {Complex(0.9, 0.1), Complex(2.5, 1.0), Complex(11, 3), Complex(40, 6)}) {
      auto js = specfun::bessel_j_seq(18, z);
      auto hs = specfun::hankel1_seq(18, z);
      for (int n = 1; n <= 16; ++n) {
        Complex rj = js[n - 1] + js[n + 1] - 2.0 * double(n) / z * js[n];
        Complex rh = hs[n - 1] + hs[n + 1] - 2.0 * double(n) / z * hs[n];
        worst = std::max(worst, std::abs(rj) / (std::abs(js[n]) + 1e-300));
        worst = std::max(worst, std::abs(rh) / (std::abs(hs[n]) + 1e-300));
      }
    }
    push(out, log, "specfun", "three_term_recurrence", worst <= 1e-10, worst, 1e-10);
  }

  // quadrature: Hilbert symbol exactness
  {
    const int n = 24;
    FourierGrid g = fourier_grid(n);
    double worst = 0;
    for (int q = -n; q < n; ++q) {
      CVector v(2 * n);
      for (int j = 0; j < 2 * n; ++j) v[j] = std::polar(1.0, q * kPi * j / n);
      CVector h = hilbert_derivative(g, v);
      worst = std::max(worst, (h - Complex(-0.5 * std::abs(q)) * v).cwiseAbs().maxCoeff());
    }
    push(out, log, "quadrature", "hilbert_symbol", worst < 1e-12, worst, 1e-12);
  }

  // operators: circle eigenvalues of S against the separation of variables
  {
    NodeSet s = sample(make_circle(), 64);
    double worst = 0;
    for (Complex k : {Complex(1, 0), Complex(2, 1)}) {
      OperatorMatrix S = assemble_single_layer(s, Wavenumber(k));
      auto js = specfun::bessel_j_seq(17, k);
      auto hs = specfun::hankel1_seq(17, k);
      for (int mode = -16; mode <= 16; ++mode) {
        CVector v(s.size());
        for (int j = 0; j < s.size(); ++j) v[j] = std::polar(1.0, mode * kPi * j / s.n);
        Complex lam = 0.5 * kI * kPi * js[std::abs(mode)] * hs[std::abs(mode)];
        worst = std::max(worst, (S.mat * v - lam * v).cwiseAbs().maxCoeff());
      }
    }
    push(out, log, "operators", "circle_single_layer_eigenvalues", worst < 1e-10, worst,
         1e-10);
  }

  // operators: positivity of the complex-wavenumber quadratic forms
  {
    std::mt19937 rng(20240811);
    std::normal_distribution<double> gauss;
    double worst_s = 1e300, worst_n = 1e300;
    for (const char* geom : {"circle", "kite", "cavity"}) {
      NodeSet s = sample(curve_by_name(geom), 48);
      OperatorFamily f = assemble_family(s, Wavenumber(Complex(2, 1)));
      for (int trial = 0; trial < 100; ++trial) {
        CVector phi(s.size());
        for (int j = 0; j < s.size(); ++j) phi[j] = Complex(gauss(rng), gauss(rng));
        Complex qs = 0, qn = 0;
        CVector Sphi = f.S * phi, Nphi = f.N * phi;
        for (int j = 0; j < s.size(); ++j) {
          double w = kPi / s.n * s.jac[j];
          qs += std::conj(phi[j]) * w * Sphi[j];
          qn += std::conj(phi[j]) * w * Nphi[j];
        }
        worst_s = std::min(worst_s, qs.imag());
        worst_n = std::min(worst_n, qn.imag());
      }
    }
    push(out, log, "operators", "positivity_S", worst_s > 0, worst_s, 0,
         "min Im quadratic form over 300 random densities");
    push(out, log, "operators", "positivity_N", worst_n > 0, worst_n, 0);
  }

  // operators: per-mode symbol positivity and the sigma product
  {
    double worst = 1e300;
    for (int xi = -256; xi <= 256; ++xi) {
      worst = std::min(worst, symbol_p_s(xi, Complex(2, 1)).imag());
      worst = std::min(worst, symbol_p_n(xi, Complex(2, 1)).imag());
    }
    push(out, log, "operators", "symbol_positivity", worst > 0, worst, 0);

    NodeSet s = sample(make_kite(), 32);
    OperatorMatrix SS = assemble_sigma(s, OperatorKind::SigmaS, Wavenumber(Complex(2, 1)));
    OperatorMatrix SN = assemble_sigma(s, OperatorKind::SigmaN, Wavenumber(Complex(2, 1)));
    double prod = (SN.mat * SS.mat + 0.25 * CMatrix::Identity(s.size(), s.size()))
                      .cwiseAbs()
                      .maxCoeff();
    push(out, log, "operators", "sigma_product_quarter_identity", prod < 1e-12, prod, 1e-12);

    bool rejected = false;
    try {
      (void)assemble_sigma(s, OperatorKind::SigmaS, Wavenumber(Complex(2, 0)));
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    push(out, log, "operators", "sigma_rejects_real_kappa1", rejected, rejected ? 1 : 0, 1);
  }

  // operators: Calderon identities on a fixed analytic density
  {
    for (const char* geom : {"circle", "kite"}) {
      NodeSet s = sample(curve_by_name(geom), 64);
      OperatorFamily f = assemble_family(s, Wavenumber(Complex(2, 0)));
      CVector psi(s.size());
      for (int j = 0; j < s.size(); ++j)
        psi[j] = std::exp(Complex(0, 2) * std::cos(s.t[j])) * (1.0 + 0.5 * std::sin(s.t[j]));
      CMatrix I4 = 0.25 * CMatrix::Identity(s.size(), s.size());
      double sn = ((f.S * f.N + I4 - f.D * f.D) * psi).cwiseAbs().maxCoeff();
      double ns = ((f.N * f.S + I4 - f.Dstar * f.Dstar) * psi).cwiseAbs().maxCoeff();
      push(out, log, "operators", std::string("calderon_SN_") + geom, sn < 1e-8, sn, 1e-8);
      push(out, log, "operators", std::string("calderon_NS_") + geom, ns < 1e-8, ns, 1e-8);
    }
  }

  // operators: smoothing orders of the differences
  {
    NodeSet s = sample(make_circle(), 64);
    OperatorMatrix S = assemble_single_layer(s, Wavenumber(Complex(2, 1)));
    OperatorMatrix Sg = assemble_sigma(s, OperatorKind::SigmaS, Wavenumber(Complex(2, 1)));
    double sl1 = operator_difference_decay(S.mat, Sg.mat, s.n);
    push(out, log, "operators", "slope_S_minus_sigmaS", sl1 <= -2.7, sl1, -2.7);

    OperatorMatrix Sa = assemble_single_layer(s, Wavenumber(Complex(1, 0)));
    OperatorMatrix Sb = assemble_single_layer(s, Wavenumber(Complex(2.5, 0)));
    double sl2 = operator_difference_decay(Sa.mat, Sb.mat, s.n);
    push(out, log, "operators", "slope_S_difference", sl2 <= -2.7, sl2, -2.7);

    OperatorMatrix Na = assemble_hypersingular(s, Wavenumber(Complex(1, 0)));
    OperatorMatrix Nb = assemble_hypersingular(s, Wavenumber(Complex(2.5, 0)));
    double sl3 = operator_difference_decay(Na.mat, Nb.mat, s.n);
    push(out, log, "operators", "slope_N_difference", sl3 <= -0.7, sl3, -0.7);
  }

  // formulations: the five systems agree on the far field
  {
    TransmissionConfig cfg;
    cfg.geometry = "kite";
    cfg.omega = 4;
    cfg.eps2 = 2;
    cfg.n = 48;
    cfg.tol = 1e-10;
    RunOptions ro;
    ro.reference = ReferenceKind::None;
    std::vector<FarField> fields;
    for (Formulation f : {Formulation::SK14, Formulation::SK15, Formulation::FK16,
                          Formulation::SKR_LP, Formulation::SKR_PS}) {
      cfg.formulation = f;
      fields.push_back(run_single(cfg, ro).farfield);
    }
    double worst = 0;
    for (size_t a = 0; a < fields.size(); ++a)
      for (size_t b = a + 1; b < fields.size(); ++b)
        worst = std::max(worst, far_field_error(fields[a], fields[b]));
    push(out, log, "formulations", "five_formulations_agree", worst <= 10 * cfg.tol,
         worst, 10 * cfg.tol);
  }

  // formulations: SKR solutions satisfy the transmission conditions
  {
    TransmissionConfig cfg;
    cfg.geometry = "kite";
    cfg.omega = 4;
    cfg.eps2 = 2;
    cfg.polarization = Polarization::H; // nu = 1/2 exercises the scaling
    cfg.formulation = Formulation::SKR_LP;
    cfg.n = 48;
    cfg.tol = 1e-10;
    NodeSet nodes = sample(curve_by_name(cfg.geometry), cfg.n);
    OperatorSet ops = build_operator_set(nodes, cfg);
    BlockSystem sys = assemble_formulation(cfg, nodes, ops);
    KrylovReport kr = gmres_solve([&sys](const CVector& v) { return sys.apply(v); },
                                  sys.rhs, cfg.tol);
    PlaneWaveTrace inc = plane_wave_trace(nodes, Complex(cfg.k1(), 0.0),
                                          cfg.incident_direction());
    FieldDensities fd = recover_densities(sys, kr.solution, inc, cfg.nu());
    // exterior traces by the jump relations, interior traces likewise
    const int m = nodes.size();
    CMatrix I = CMatrix::Identity(m, m);
    CVector u1 = (ops.D1 + 0.5 * I) * fd.mu - ops.S1 * fd.sigma;
    CVector du1 = ops.N1 * fd.mu - (ops.Ds1 - 0.5 * I) * fd.sigma;
    CVector u2 = -(ops.D2 - 0.5 * I) * fd.mu2 + ops.S2 * fd.sigma2;
    CVector du2 = -ops.N2 * fd.mu2 + (ops.Ds2 + 0.5 * I) * fd.sigma2;
    double r1 = (u1 + inc.value - u2).cwiseAbs().maxCoeff();
    double r2 = (du1 + inc.normal_derivative - cfg.nu() * du2).cwiseAbs().maxCoeff();
    double worst = std::max(r1, r2);
    push(out, log, "formulations", "skr_transmission_conditions", worst < 1e-7, worst,
         1e-7, "traces recovered through the jump relations");
  }

  // postprocess/mie: zero contrast scatters nothing
  {
    TransmissionConfig cfg;
    cfg.geometry = "circle";
    cfg.omega = 6;
    cfg.eps2 = 1.0;
    cfg.formulation = Formulation::SK15;
    cfg.n = 32;
    cfg.tol = 1e-10;
    RunOptions ro;
    ro.reference = ReferenceKind::None;
    SolveReport rep = run_single(cfg, ro);
    double worst = rep.farfield.amplitude.cwiseAbs().maxCoeff();
    push(out, log, "postprocess", "zero_contrast_silent", worst < 1e-8, worst, 1e-8);
  }

  return out;
}

} // namespace htx
