// Command-line front door: verification runs for the reductive-splitting
// results, structure tables, and the frame -> (A, K) -> holonomy pipeline.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biconn/io.hpp"
#include "biconn/reductive.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
  unsigned long seed = 351204;
  double tol = 1e-12;
};

double default_tol() {
  if (const char* env = std::getenv("BICONN_TOL")) return std::stod(env);
  return 1e-12;
}

biconn::json report_header(const CommonOpts& c) {
  return {{"version", biconn::kVersion}, {"seed", c.seed}, {"tol", c.tol}};
}

void emit(const biconn::json& report, const std::string& output) {
  if (!output.empty()) biconn::save_json(output, report);
}

int cmd_verify(int n, const std::string& beta_str, const CommonOpts& c,
               const std::string& output) {
  using namespace biconn;
  Rational beta = beta_str.empty() ? Rational(0) : parse_rational(beta_str);
  json report = report_header(c);
  report["n"] = n;
  report["beta"] = beta_str.empty() ? "0" : beta_str;

  auto space = solve_intertwiners(n);
  report["intertwiner_dim"] = space.dim();
  std::cout << "intertwiner space dimension: " << space.dim() << "\n";
  std::cout << "family dimension " << space.dim()
            << (space.dim() == 1 ? " (1-parameter family of splittings)"
                                 : " (rigid splitting)")
            << "\n";

  auto split = build_splitting(n, beta);
  auto rr = verify_reductive(split);
  report["reductive_check"] = {{"passed", rr.passed}, {"detail", rr.detail}};
  std::cout << "reductive check: " << (rr.passed ? "PASS" : "FAIL") << " (" << rr.detail
            << ")\n";

  json table = json::array();
  std::cout << "n  dim(intertwiners)  family dim\n";
  for (const auto& row : schur_dimension_table(std::max(n, 3))) {
    table.push_back({{"n", row.n},
                     {"intertwiner_dim", row.intertwiner_dim},
                     {"family_dim", row.family_dim}});
    std::cout << row.n << "  " << row.intertwiner_dim << "  " << row.family_dim << "\n";
  }
  report["dimension_table"] = table;

  bool dim_ok = n == 3 ? space.dim() == 1 : space.dim() == 0;
  report["passed"] = rr.passed && dim_ok;
  emit(report, output);
  if (!rr.passed || !dim_ok) return kExitInvariant;
  return kExitOk;
}

int cmd_dimension_table(int n_max, const CommonOpts& c, const std::string& output) {
  using namespace biconn;
  json report = report_header(c);
  json table = json::array();
  std::cout << "n  dim(intertwiners)  family dim\n";
  for (const auto& row : schur_dimension_table(n_max)) {
    table.push_back({{"n", row.n},
                     {"intertwiner_dim", row.intertwiner_dim},
                     {"family_dim", row.family_dim}});
    std::cout << row.n << "  " << row.intertwiner_dim << "  " << row.family_dim << "\n";
  }
  report["dimension_table"] = table;
  emit(report, output);
  return kExitOk;
}

int cmd_tables(int n, const CommonOpts& c, const std::string& outdir) {
  using namespace biconn;
  std::string dir = outdir.empty() ? "." : outdir;
  {
    std::ofstream csv(dir + "/bracket_table.csv");
    if (!csv) throw std::runtime_error("cannot write " + dir + "/bracket_table.csv");
    csv << bracket_table_csv(n);
  }
  auto iso = clifford_matrix_iso_check(n);
  json report = report_header(c);
  report["iso_check"] = {{"passed", iso.passed},
                         {"alpha", iso.alpha ? num_str(*iso.alpha) + "/" + den_str(*iso.alpha)
                                             : "none"},
                         {"detail", iso.detail}};
  std::cout << "clifford<->matrix iso check: " << (iso.passed ? "PASS" : "FAIL") << " ("
            << iso.detail << ")\n";
  bool all = iso.passed;
  if (n == 3) {
    auto pauli = pauli_structure_check();
    report["pauli_check"] = {{"passed", pauli.passed},
                             {"pairs_checked", pauli.pairs_checked},
                             {"detail", pauli.detail}};
    std::cout << "pauli structure check: " << (pauli.passed ? "PASS" : "FAIL") << " ("
              << pauli.pairs_checked << " pairs)\n";
    auto su2 = su2_basis_report(unsigned(c.seed));
    report["su2_basis_report"] = {{"passed", su2.passed},
                                  {"draws_checked", su2.draws_checked},
                                  {"detail", su2.detail}};
    std::cout << "su(2) basis change identity: " << (su2.passed ? "PASS" : "FAIL") << " ("
              << su2.draws_checked << " draws)\n";
    all = all && pauli.passed && su2.passed;
  }
  save_json(dir + "/structure_report.json", report);
  std::cout << "wrote " << dir << "/bracket_table.csv and " << dir
            << "/structure_report.json\n";
  return all ? kExitOk : kExitInvariant;
}

int cmd_decompose(const std::string& input, double beta, const CommonOpts& c,
                  const std::string& output) {
  using namespace biconn;
  auto om = omega_from_json(load_json(input));
  auto bi = decompose(om, beta);
  json j = to_json(bi);
  j["meta"] = report_header(c);
  save_json(output, j);
  std::cout << "wrote " << output << "\n";
  return kExitOk;
}

int cmd_recompose(const std::string& input, const CommonOpts& c, const std::string& output) {
  using namespace biconn;
  auto bi = bi_from_json(load_json(input));
  auto om = recompose(bi);
  json j = to_json(om);
  j["meta"] = report_header(c);
  save_json(output, j);
  std::cout << "wrote " << output << "\n";
  return kExitOk;
}

int cmd_pipeline(const std::string& frame_path, double beta, const CommonOpts& c,
                 const std::string& out, const std::string& omega_out,
                 const std::string& metric_out) {
  using namespace biconn;
  auto F = frame_from_json(load_json(frame_path));
  auto g = metric_from_frame(F);
  if (!g.lorentzian_signature()) {
    std::cerr << "frame_geometry: metric signature is not lorentzian\n";
    return kExitInvariant;
  }
  if (!metric_out.empty()) {
    json j = grid_to_json(g.g.grid);
    j["kind"] = "metric";
    j["g"] = field_payload(g.g);
    save_json(metric_out, j);
  }
  auto om = spin_connection_from_frame(F);
  if (!omega_out.empty()) save_json(omega_out, to_json(om));
  auto bi = decompose(om, beta);
  json j = to_json(bi);
  j["meta"] = report_header(c);
  save_json(out, j);
  std::cout << "wrote " << out << "\n";
  return kExitOk;
}

std::vector<double> parse_sweep(const std::string& spec) {
  // "a:b:steps"
  std::istringstream is(spec);
  std::string sa, sb, ssteps;
  if (!std::getline(is, sa, ':') || !std::getline(is, sb, ':') || !std::getline(is, ssteps))
    throw std::invalid_argument("--beta-sweep expects a:b:steps");
  double a = std::stod(sa), b = std::stod(sb);
  int steps = std::stoi(ssteps);
  if (steps < 1) throw std::invalid_argument("--beta-sweep needs steps >= 1");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? a : a + (b - a) * double(i) / double(steps - 1));
  return out;
}

int cmd_holonomy(const std::string& bi_path, const std::string& loop_path,
                 const std::string& sweep, const CommonOpts& c, const std::string& output) {
  using namespace biconn;
  auto bi = bi_from_json(load_json(bi_path));
  auto loop = loop_from_json(load_json(loop_path));
  json report = report_header(c);

  auto matrix_json = [](const SU2Element& u) {
    json m = json::array();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.push_back({u(i, j).real(), u(i, j).imag()});
    return m;
  };

  if (sweep.empty()) {
    SU2Element u = holonomy(bi, loop);
    report["holonomy"] = matrix_json(u);
    report["trace"] = {u.trace().real(), u.trace().imag()};
    std::cout << "tr U = " << u.trace().real() << " + " << u.trace().imag() << "i\n";
  } else {
    // A(beta') = A(beta) + (beta' - beta) K, the affine structure in beta.
    json entries = json::array();
    std::cout << "beta,re_trace,im_trace\n";
    for (double b : parse_sweep(sweep)) {
      BIField<double> shifted = bi;
      shifted.beta = b;
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t mu = 0; mu < shifted.A.dirs; ++mu)
          for (std::size_t p = 0; p < shifted.A.grid.npoints(); ++p)
            shifted.A.at(k, mu, p) += (b - bi.beta) * bi.K.at(k, mu, p);
      SU2Element u = holonomy(shifted, loop);
      entries.push_back({{"beta", b},
                         {"holonomy", matrix_json(u)},
                         {"trace", {u.trace().real(), u.trace().imag()}}});
      std::cout << b << "," << u.trace().real() << "," << u.trace().imag() << "\n";
    }
    report["sweep"] = entries;
  }
  emit(report, output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barbero-Immirzi connection toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  common.tol = default_tol();
  app.add_option("--seed", common.seed, "seed for randomized property runs");
  app.add_option("--tol", common.tol, "numeric tolerance (env BICONN_TOL overrides default)");

  int n = 3, n_max = 6;
  std::string beta_str, input, output, frame_path, omega_out, metric_out;
  std::string bi_path, loop_path, sweep;
  double beta = 0;

  auto* verify = app.add_subcommand("verify", "verify the reductive splitting for one n");
  verify->add_option("--n", n, "spatial dimension")->required()->check(CLI::Range(3, 16));
  verify->add_option("--beta", beta_str, "BI parameter as a rational, e.g. 3/7");
  verify->add_option("--output", output, "JSON report path");

  auto* dim = app.add_subcommand("dimension-table", "intertwiner dimensions for n = 3..max");
  dim->add_option("--max", n_max, "largest n")->required()->check(CLI::Range(3, 16));
  dim->add_option("--output", output, "JSON report path");

  auto* tables = app.add_subcommand("tables", "bracket table and structure reports");
  tables->add_option("--n", n, "spatial dimension")->check(CLI::Range(2, 16));
  tables->add_option("--output", output, "output directory");

  auto* dec = app.add_subcommand("decompose", "omega -> (A, K)");
  dec->add_option("--input", input, "omega field JSON")->required();
  dec->add_option("--beta", beta, "BI parameter")->required();
  dec->add_option("--output", output, "BI field JSON")->required();

  auto* rec = app.add_subcommand("recompose", "(A, K) -> omega");
  rec->add_option("--input", input, "BI field JSON")->required();
  rec->add_option("--output", output, "omega field JSON")->required();

  auto* pipe = app.add_subcommand("pipeline", "frame -> metric + omega -> (A, K)");
  pipe->add_option("--frame", frame_path, "frame field JSON")->required();
  pipe->add_option("--beta", beta, "BI parameter");
  pipe->add_option("--out", output, "BI field JSON")->required();
  pipe->add_option("--omega", omega_out, "also write the spin connection");
  pipe->add_option("--metric", metric_out, "also write the metric");

  auto* hol = app.add_subcommand("holonomy", "SU(2) holonomy along a loop");
  hol->add_option("--bi", bi_path, "BI field JSON")->required();
  hol->add_option("--loop", loop_path, "loop JSON (list of chart points)")->required();
  hol->add_option("--beta-sweep", sweep, "a:b:steps sweep of the BI parameter");
  hol->add_option("--output", output, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(n, beta_str, common, output);
    if (*dim) return cmd_dimension_table(n_max, common, output);
    if (*tables) return cmd_tables(n, common, output);
    if (*dec) return cmd_decompose(input, beta, common, output);
    if (*rec) return cmd_recompose(input, common, output);
    if (*pipe) return cmd_pipeline(frame_path, beta, common, output, omega_out, metric_out);
    if (*hol) return cmd_holonomy(bi_path, loop_path, sweep, common, output);
  } catch (const biconn::rigid_splitting_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
