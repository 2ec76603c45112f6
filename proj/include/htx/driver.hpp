#pragma once

#include "htx/formulations.hpp"
#include "htx/gmres.hpp"
#include "htx/mie.hpp"
#include "htx/postprocess.hpp"

#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace htx {

enum class ReferenceKind { Auto, Mie, Refined, None };

// Thrown when GMRES stalls; carries the residual history for diagnostics.
struct UnconvergedError : std::runtime_error {
  std::vector<double> residuals;
  UnconvergedError(const std::string& what, std::vector<double> hist)
      : std::runtime_error(what), residuals(std::move(hist)) {}
};

struct SolveReport {
  TransmissionConfig config;
  Complex kappa1_used{0, 0}; // zero when not a regularized formulation
  int unknowns = 0;
  KrylovReport krylov;
  FieldDensities densities;
  FarField farfield;
  double eps_inf = std::numeric_limits<double>::quiet_NaN();
  double matvec_seconds = 0;
  double assemble_seconds = 0, solve_seconds = 0;
  // relative max-norm gap between the GMRES and dense LU solutions;
  // NaN when the check was skipped
  double direct_gap = std::numeric_limits<double>::quiet_NaN();
};

struct RunOptions {
  ReferenceKind reference = ReferenceKind::Auto;
  int directions = 720;
  bool check_direct = false;  // compare against a dense LU solve
  bool time_matvec = false;
};

SolveReport run_single(const TransmissionConfig& cfg, const RunOptions& opt = {});

// Reference far field for a configuration: Mie series for the circle,
// otherwise sk15 at doubled resolution with tolerance 1e-12.
FarField reference_far_field(const TransmissionConfig& cfg, int directions);

// ---- benchmark tables ----------------------------------------------------

struct ReferenceRow {
  const char* geometry;
  double omega, eps1, eps2;
  int unknowns;
  bool nu_is_ratio; // nu = eps1/eps2 instead of 1
  // iterations and far-field errors from the published experiments;
  // sk14 appears only where published (tables 6 and 7), otherwise -1
  int it_sk15, it_fk16, it_skr_lp, it_skr_ps, it_sk14;
  double e_sk15, e_fk16, e_skr_lp, e_skr_ps;
};

struct ReferenceTable {
  int id;
  double tol;
  std::vector<ReferenceRow> rows;
};

const ReferenceTable& reference_table(int id); // ids 1, 3, 4, 5, 6, 7

struct TableCell {
  int iterations = 0;
  double eps_inf = std::numeric_limits<double>::quiet_NaN();
  int ref_iterations = -1;
  bool iter_ok = false; // within max(3, 20%) of the reference count
};

struct TableRowResult {
  ReferenceRow ref;
  bool skipped = false;
  std::map<Formulation, TableCell> cells;
};

struct TableRunOptions {
  double max_omega = 32; // desk-scale default; raise to run every row
  std::string out_dir;   // when set, CSV + resolved config are written there
  bool with_reference = true; // compute far-field errors
  std::ostream* log = nullptr;
};

std::vector<TableRowResult> run_table(int id, const TableRunOptions& opt);

// ---- property suite -------------------------------------------------------

struct PropertyResult {
  std::string module, name;
  bool pass = false;
  double observed = 0, required = 0;
  std::string note;
};

std::vector<PropertyResult> run_properties(std::ostream* log = nullptr);

} // namespace htx
