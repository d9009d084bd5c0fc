#pragma once

#include "scf/hamiltonian.hpp"
#include "scf/solver.hpp"

#include "json.hpp"

namespace scf {

using json = nlohmann::ordered_json;

struct NonScfError : Error {
  using Error::Error;
};

enum class SectorMethod { Ed, Algebraic };

struct PipelineOptions {
  double tol = 1e-8;
  std::size_t qubit_cap = kDefaultQubitCap;
  SectorMethod sector_method = SectorMethod::Ed;
  int max_hole_len = 0;
};

/// Rounds to 12 significant digits so reports are byte-deterministic.
double report_round(double v);
json jnum(double v);

json analyze_report(const Hamiltonian &h, const PipelineOptions &opt);

/// Analytic pipeline only: sectors, energies, spectrum.
json solve_report(const Hamiltonian &h, const PipelineOptions &opt);

/// Solve plus the ED oracle and all operator-identity checks; the
/// `verified` field reports whether every residual stayed under opt.tol.
json verify_report(const Hamiltonian &h, const PipelineOptions &opt);

/// Fiducial bosonization of a graph file into model-file text.
std::string realize_model_text(const Graph &g, double b);

bool report_is_scf(const json &report);

} // namespace scf
