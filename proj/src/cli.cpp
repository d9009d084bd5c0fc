#include "scf/cli.hpp"

#include "scf/models.hpp"
#include "scf/pipeline.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace scf {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonScf = 2;
constexpr int kExitVerifyFailed = 3;

void emit(const std::string &text, const std::string &output_path,
          std::string &out) {
  if (output_path.empty()) {
    out += text;
    return;
  }
  std::ofstream f(output_path);
  if (!f)
    throw Error("cannot write output file: " + output_path);
  f << text;
}

} // namespace

CliResult run_cli(const std::vector<std::string> &args) {
  CliResult result;
  CLI::App app{"Frustration-graph free-fermion solver"};
  app.require_subcommand(1);

  PipelineOptions opt;
  std::string model_spec, graph_path, output_path, sector_method = "ed";
  double realize_b = 1.0;

  auto add_common = [&](CLI::App *cmd, bool with_model) {
    if (with_model)
      cmd->add_option("model", model_spec,
                      "model file or builtin:<name>[?k=v&...]")
          ->required();
    cmd->add_option("--tol", opt.tol, "verification tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--qubit-cap", opt.qubit_cap,
                    "dense-matrix qubit cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-hole-len", opt.max_hole_len,
                    "cap on enumerated hole length (0 = none)");
    cmd->add_option("--sector-method", sector_method,
                    "sector enumeration route")
        ->check(CLI::IsMember({"ed", "algebraic"}));
    cmd->add_option("--output,-o", output_path, "write the report here");
  };

  auto *analyze = app.add_subcommand("analyze", "graph facts for a model");
  add_common(analyze, true);
  auto *solve = app.add_subcommand("solve", "analytic free-fermion solution");
  add_common(solve, true);
  auto *verify =
      app.add_subcommand("verify", "solve plus ED and identity checks");
  add_common(verify, true);
  auto *realize = app.add_subcommand(
      "realize", "fiducial bosonization of a graph into a model file");
  realize->add_option("graph", graph_path, "graph file (`n m` then edges)")
      ->required();
  realize->add_option("--b", realize_b, "coupling for every vertex");
  realize->add_option("--output,-o", output_path, "write the model here");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError &e) {
    std::ostringstream os;
    int code = app.exit(e, os, os);
    result.err = os.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  opt.sector_method =
      sector_method == "algebraic" ? SectorMethod::Algebraic : SectorMethod::Ed;

  try {
    if (realize->parsed()) {
      Graph g = load_graph(graph_path);
      emit(realize_model_text(g, realize_b), output_path, result.out);
      return result;
    }
    Hamiltonian h = resolve_model(model_spec);
    json report;
    if (analyze->parsed()) {
      report = analyze_report(h, opt);
      result.exit_code = report_is_scf(report) ? kExitOk : kExitNonScf;
    } else if (solve->parsed()) {
      report = solve_report(h, opt);
    } else {
      report = verify_report(h, opt);
      if (!report["verified"].get<bool>())
        result.exit_code = kExitVerifyFailed;
    }
    emit(report.dump(2) + "\n", output_path, result.out);
  } catch (const NonScfError &e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitNonScf;
  } catch (const ParseError &e) {
    result.err = std::string("parse error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
  } catch (const std::exception &e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
  }
  return result;
}

} // namespace scf
