#include "qmc/basis.hpp"
#include "qmc/clique_decomp.hpp"
#include "qmc/identities.hpp"
#include "qmc/json_io.hpp"
#include "qmc/oracle.hpp"
#include "qmc/sdp.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qmc;

namespace {

struct Input {
  std::string text;
  WeightedGraph graph;
};

Input read_input(const std::string& path) {
  Input in;
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open graph file '" + path + "'");
    ss << f.rdbuf();
  }
  in.text = ss.str();
  in.graph = parse_graph(in.text);
  return in;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// Failure after the report has been printed.
struct ReportedFailure {
  std::string message;
};

class Report {
 public:
  Report(std::string command, std::vector<std::string> args)
      : start_(std::chrono::steady_clock::now()) {
    out_["command"] = std::move(command);
    out_["args"] = std::move(args);
  }
  void input(const std::string& text) { out_["input_digest"] = digest(text); }
  void emit(Json result) {
    out_["result"] = std::move(result);
    out_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cout << out_.dump(2) << "\n";
  }

 private:
  Json out_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Max Cut eigenvalue bounds: clique decompositions, swap-algebra SDP relaxations, brute-force oracle"};
  app.require_subcommand(1);
  std::vector<std::string> args(argv + 1, argv + argc);

  std::string graph_path;
  auto* decompose = app.add_subcommand("decompose", "tree clique decomposition and signed clique terms");
  decompose->add_option("graph", graph_path, "graph edge-list file ('-' for stdin)")->required();

  int r = 1;
  std::string mode = "exact", provider = "oracle";
  double eig_tol = 1e-6;
  auto* eig = app.add_subcommand("eig", "per-irrep extreme eigenvalues via the tree clique decomposition");
  eig->add_option("graph", graph_path, "graph edge-list file ('-' for stdin)")->required();
  eig->add_option("--r", r, "number of extreme eigenvalues per irrep")->check(CLI::PositiveNumber);
  eig->add_option("--mode", mode, "exact | bound")->check(CLI::IsMember({"exact", "bound"}));
  eig->add_option("--leaf-provider", provider, "bounds for non-clique leaves: oracle | sdp")
      ->check(CLI::IsMember({"oracle", "sdp"}));
  eig->add_option("--tol", eig_tol, "padding applied to numeric leaf values (default 1e-6)");

  int level = 1;
  std::optional<int> irrep;
  bool do_solve = false, minimize = false;
  std::string export_path;
  double sdp_tol = 1e-8;
  int max_iter = 200;
  auto* relax = app.add_subcommand("relax", "build the level-1/level-2 swap moment relaxation");
  relax->add_option("graph", graph_path, "graph edge-list file ('-' for stdin)")->required();
  relax->add_option("--level", level, "relaxation level (1 or 2)");
  relax->add_option("--irrep", irrep, "restrict to the [n-k,k] irrep");
  auto* solve_flag = relax->add_flag("--solve", do_solve, "solve with the embedded interior-point solver");
  auto* export_opt = relax->add_option("--export", export_path, "write an SDPA sparse file");
  solve_flag->excludes(export_opt);
  relax->add_flag("--minimize", minimize, "bound the smallest eigenvalue instead of the largest");
  relax->add_option("--tol", sdp_tol, "solver tolerance (default 1e-8)");
  relax->add_option("--max-iter", max_iter, "solver iteration cap (default 200)");

  double oracle_tol = 1e-9;
  bool full_spectrum = false;
  auto* oracle = app.add_subcommand("oracle", "dense brute-force extreme eigenvalues (n <= 14)");
  oracle->add_option("graph", graph_path, "graph edge-list file ('-' for stdin)")->required();
  oracle->add_option("--tol", oracle_tol, "eigenvalue tolerance (default 1e-9)");
  oracle->add_flag("--spectrum", full_spectrum, "also list the distinct eigenvalues (n <= 10)");

  bool quick = false;
  auto* verify = app.add_subcommand("verify", "run the swap-algebra identity suite");
  verify->add_flag("--quick", quick, "skip deriving B3/B4");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) {
      Report rep("decompose", args);
      Input in = read_input(graph_path);
      rep.input(in.text);
      auto tree = tree_clique_decomposition(in.graph);
      Json res;
      res["graph"] = graph_json(in.graph);
      res["tree"] = tree_json(tree);
      res["terms"] = terms_json(signed_clique_terms(tree));
      rep.emit(std::move(res));
    } else if (eig->parsed()) {
      Report rep("eig", args);
      Input in = read_input(graph_path);
      rep.input(in.text);
      EigOptions opts;
      opts.r = r;
      opts.mode = mode == "exact" ? EigMode::Exact : EigMode::Bound;
      opts.provider = provider == "oracle" ? LeafProvider::Oracle : LeafProvider::Sdp;
      opts.tol = eig_tol;
      EigResult res = extreme_eigenvalues(in.graph, opts);
      Json out = eig_json(res);
      out["graph"] = graph_json(in.graph);
      rep.emit(std::move(out));
    } else if (relax->parsed()) {
      if (level != 1 && level != 2) throw InputError("--level must be 1 or 2");
      if (!do_solve && export_path.empty()) throw InputError("relax needs --solve or --export PATH");
      Report rep("relax", args);
      Input in = read_input(graph_path);
      rep.input(in.text);
      if (irrep && (*irrep < 0 || 2 * *irrep > in.graph.n())) throw InputError("--irrep k needs 0 <= k <= n/2");
      SdpProblem p = level == 1 ? build_level1(in.graph, irrep) : build_level2(in.graph, irrep);
      if (minimize) p = negated(p);
      if (do_solve) {
        SolveResult s = solve(p, SolveOptions{sdp_tol, max_iter});
        if (minimize) s.value = -s.value;
        Json out = sdp_result_json(in.graph, p, s);
        out["sense"] = minimize ? "min" : "max";
        rep.emit(std::move(out));
        if (s.status != SolveStatus::Converged) throw ReportedFailure{std::string("solver status: ") + to_string(s.status)};
      } else {
        std::ofstream f(export_path);
        if (!f) throw InputError("cannot write '" + export_path + "'");
        f << export_sdpa(p, true);
        if (!f) throw std::runtime_error("writing '" + export_path + "' failed");
        Json out;
        out["graph"] = graph_json(in.graph);
        out["level"] = level;
        if (irrep) out["irrep"] = {in.graph.n(), *irrep};
        out["sense"] = minimize ? "min" : "max";
        out["matrix_dim"] = p.block_dim;
        out["n_vars"] = p.n_vars();
        out["objective_constant"] = to_double(p.objective.constant);
        out["file"] = export_path;
        rep.emit(std::move(out));
      }
    } else if (oracle->parsed()) {
      Report rep("oracle", args);
      Input in = read_input(graph_path);
      rep.input(in.text);
      OracleMatrix h = hamiltonian_matrix(in.graph);
      Extremes e = extreme_eigenvalues(h, oracle_tol);
      Json out;
      out["graph"] = graph_json(in.graph);
      out["min"] = e.min;
      out["max"] = e.max;
      if (full_spectrum) {
        Eigen::VectorXd ev = spectrum(h);
        Json distinct = Json::array();
        double last = 0;
        for (Eigen::Index i = 0; i < ev.size(); ++i)
          if (i == 0 || ev(i) - last > oracle_tol * std::max(1.0, std::abs(ev(i)))) {
            distinct.push_back(ev(i));
            last = ev(i);
          }
        out["spectrum"] = std::move(distinct);
      }
      rep.emit(std::move(out));
    } else if (verify->parsed()) {
      Report rep("verify", args);
      auto checks = verify_identities(VerifyOptions{!quick});
      for (const auto& c : checks) std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
      Json out = checks_json(checks);
      bool ok = out["all_pass"].get<bool>();
      rep.emit(std::move(out));
      if (!ok) throw ReportedFailure{"identity suite has failures"};
    }
  } catch (const ReportedFailure& f) {
    std::cerr << "qmc: " << f.message << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qmc: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
