#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "curvenorm/fft.hpp"
#include "curvenorm/harmonic.hpp"
#include "curvenorm/io.hpp"
#include "curvenorm/regularity.hpp"
#include "curvenorm/runner.hpp"
#include "curvenorm/seminorm.hpp"
#include "curvenorm/verify.hpp"
#include "curvenorm/zoo.hpp"

namespace {

using namespace curvenorm;

struct CurveOptions {
  std::string curve = "circle";
  double R = 1.0;
  double a = 2.0, b = 1.0;
  double eps = 0.2;
  int lobes = 3;
  int level = 3;
  double delta = 0.05;
  int n_nodes = 4096;

  void attach(CLI::App* cmd) {
    cmd->add_option("--curve", curve,
                    "Zoo family (circle|ellipse|star|polygon|koch|barbell) or a"
                    " curve JSON path");
    cmd->add_option("--R", R, "circle radius");
    cmd->add_option("--a", a, "ellipse semi-axis a");
    cmd->add_option("--b", b, "ellipse semi-axis b");
    cmd->add_option("--eps", eps, "star amplitude");
    cmd->add_option("--lobes", lobes, "star lobe count");
    cmd->add_option("--level", level, "koch prefractal level");
    cmd->add_option("--delta", delta, "barbell neck width");
    cmd->add_option("--N", n_nodes, "node count");
  }

  JordanCurve resolve() const {
    if (curve.size() > 5 && curve.substr(curve.size() - 5) == ".json") {
      JordanCurve loaded = load_curve_file(curve);
      if (loaded.size() == n_nodes && loaded.is_equispaced()) return loaded;
      return resample_arclength(loaded, n_nodes);
    }
    CurveSpec spec;
    spec.name = curve;
    spec.n_nodes = n_nodes;
    if (curve == "circle") spec.params = {{"R", R}};
    if (curve == "ellipse") spec.params = {{"a", a}, {"b", b}};
    if (curve == "star")
      spec.params = {{"eps", eps}, {"k", static_cast<double>(lobes)}};
    if (curve == "koch") spec.params = {{"level", static_cast<double>(level)}};
    if (curve == "barbell") spec.params = {{"delta", delta}};
    return make_curve(spec);
  }
};

int run_command(const std::string& config_path) {
  const RunConfig config = parse_run_config(read_text_file(config_path));
  return run(config, std::cout);
}

int energies_command(const CurveOptions& curve_opts, const std::string& fn,
                     int fourier_k, double w_re, double w_im, double center,
                     double width, double h, double tol,
                     const std::string& dump_path) {
  const JordanCurve curve = curve_opts.resolve();

  FunctionSpec spec;
  spec.name = fn;
  if (fn == "fourier_mode") spec.params = {{"k", static_cast<double>(fourier_k)}};
  if (fn == "inverse_pole") spec.params = {{"w_re", w_re}, {"w_im", w_im}};
  if (fn == "bump") spec.params = {{"center", center}, {"width", width}};
  const CurveFunction f = make_function(spec, curve);

  const SeminormResult douglas = douglas_seminorm(curve, f);
  std::cout << "douglas_value_sq: " << douglas.value_sq << "\n";

  if (is_power_of_two(curve.size())) {
    const JordanCurve normalized = normalize_to_length(curve);
    const SeminormResult spectral =
        circle_seminorm_spectral(pullback_arclength(normalized, f));
    std::cout << "spectral_value_sq: " << spectral.value_sq << "\n";
  } else {
    std::cout << "spectral_value_sq: skipped (N not a power of two)\n";
  }

  const HarmonicSolution interior = solve_interior(curve, f, h, tol);
  std::cout << "interior_energy: " << interior.result.energy
            << " (iterations " << interior.result.iterations << ", residual "
            << interior.result.residual << ")\n";
  if (!dump_path.empty())
    write_text_file(dump_path, field_dump_csv(interior.field));

  const EnergyResult exterior = exterior_energy_grid(curve, f, h, tol);
  std::cout << "exterior_energy: " << exterior.energy << " (iterations "
            << exterior.iterations << ", residual " << exterior.residual
            << ")\n";
  return kExitOk;
}

int verify_command(const CurveOptions& curve_opts, double slack, int refine,
                   double tol, bool skip_energy) {
  const JordanCurve curve = curve_opts.resolve();
  VerifyOptions options;
  options.slack = slack;
  options.refine = refine;
  options.tol = tol;
  options.energy_checks = !skip_energy;
  const VerifyReport report = verify_curve(curve, options);
  for (const auto& check : report.checks) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name
              << " observed=" << check.observed << " bound=" << check.bound;
    if (!check.witness.empty()) std::cout << " witness=" << check.witness;
    std::cout << "\n";
  }
  std::cout << (report.all_pass ? "verify OK" : "verify FAILED") << " ("
            << report.checks.size() << " checks)\n";
  return report.all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curve seminorms, Dirichlet energies and regularity constants"};
  app.require_subcommand(1);

  // run
  std::string config_path;
  CLI::App* cmd_run = app.add_subcommand("run", "execute a batch config");
  cmd_run->add_option("config", config_path, "config JSON path")->required();

  // zoo list
  CLI::App* cmd_zoo = app.add_subcommand("zoo", "built-in curves and functions");
  CLI::App* cmd_zoo_list = cmd_zoo->add_subcommand("list", "print the JSON schema");
  cmd_zoo->require_subcommand(1);

  // energies
  CurveOptions energy_curve;
  std::string fn = "fourier_mode";
  int fourier_k = 1;
  double w_re = 2.0, w_im = 0.0, center = 0.0, width = 0.1;
  double h = 1.0 / 256.0, tol = 1e-8;
  std::string dump_path;
  CLI::App* cmd_energies =
      app.add_subcommand("energies", "all four norms of one curve/function pair");
  cmd_energies->set_help_flag("--help", "print help");
  energy_curve.attach(cmd_energies);
  cmd_energies->add_option("--fn", fn,
                           "function (fourier_mode|inverse_pole|coordinate|bump)");
  cmd_energies->add_option("--k", fourier_k, "fourier mode index");
  cmd_energies->add_option("--w-re", w_re, "inverse pole, real part");
  cmd_energies->add_option("--w-im", w_im, "inverse pole, imaginary part");
  cmd_energies->add_option("--center", center, "bump center (arc-length fraction)");
  cmd_energies->add_option("--width", width, "bump width (arc-length fraction)");
  cmd_energies->add_option("--h", h, "grid spacing");
  cmd_energies->add_option("--tol", tol, "solver relative residual");
  cmd_energies->add_option("--dump-field", dump_path,
                           "write the interior grid as CSV to this path");

  // verify
  CurveOptions verify_curve_opts;
  verify_curve_opts.n_nodes = 1024;
  double slack = 0.05;
  int refine = 8;
  double verify_tol = 1e-8;
  bool skip_energy = false;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the inequality suite on one curve");
  verify_curve_opts.attach(cmd_verify);
  cmd_verify->add_option("--slack", slack, "tolerance slack on constant checks");
  cmd_verify->add_option("--refine", refine, "Mobius image subdivision");
  cmd_verify->add_option("--tol", verify_tol, "solver relative residual");
  cmd_verify->add_flag("--skip-energy", skip_energy, "skip the grid-energy checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return curvenorm::kExitConfig;
  }

  try {
    if (cmd_run->parsed()) return run_command(config_path);
    if (cmd_zoo->parsed() && cmd_zoo_list->parsed()) {
      std::cout << curvenorm::zoo_listing_json() << "\n";
      return curvenorm::kExitOk;
    }
    if (cmd_energies->parsed())
      return energies_command(energy_curve, fn, fourier_k, w_re, w_im, center,
                              width, h, tol, dump_path);
    if (cmd_verify->parsed())
      return verify_command(verify_curve_opts, slack, refine, verify_tol,
                            skip_energy);
  } catch (const curvenorm::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return curvenorm::kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return curvenorm::kExitConfig;
  } catch (const curvenorm::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return curvenorm::kExitIo;
  } catch (const curvenorm::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return curvenorm::kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return curvenorm::kExitNumeric;
  }
  return curvenorm::kExitConfig;
}
