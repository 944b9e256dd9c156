// pwa: command-line front end for the spectral approximation library.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwa/approx_operators.hpp"
#include "pwa/decomposition.hpp"
#include "pwa/errors.hpp"
#include "pwa/paley_wiener.hpp"
#include "pwa/smoothness.hpp"
#include "pwa/suite.hpp"
#include "pwa/vector_io.hpp"

using json = nlohmann::ordered_json;
using namespace pwa;

namespace {

struct OperatorArgs {
  std::string spec = "cycle:16";
  std::string kind = "L";

  void attach(CLI::App* app) {
    app->add_option("--op", spec,
                    "operator: cycle:N, path:N, complete:N, diagonal:v1,v2,..., random_psd:N[:seed], "
                    "edges:FILE, matrix:FILE")
        ->capture_default_str();
    app->add_option("--kind", kind, "L: the matrix is L and D = L^{1/2}; D: the matrix is D")
        ->check(CLI::IsMember({"L", "D"}))
        ->capture_default_str();
  }
  OperatorKind operator_kind() const { return kind == "D" ? OperatorKind::raw_D : OperatorKind::raw_L; }
  OperatorSpec parsed() const { return parse_operator_spec(spec, operator_kind()); }
  SpectralDecomposition decompose() const { return eigh(build_operator(parsed())); }
};

struct VectorArgs {
  std::string path;
  std::string format;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    app->add_option("--vector", path, "input vector file (csv: re,im rows; json: [[re,im],...])");
    app->add_option("--vector-format", format, "csv or json (default: by extension)");
    app->add_option("--seed", seed, "seed for a random vector when --vector is absent")->capture_default_str();
  }
  HilbertVector load(std::size_t dim) const {
    if (path.empty()) return corpus_vector(seed, dim);
    const auto fmt = format.empty() ? vector_format_for_path(path) : vector_format_from_string(format);
    return load_vector(path, fmt, dim);
  }
};

struct OutArgs {
  std::string path;
  void attach(CLI::App* app, const char* what) { app->add_option("--out", path, what); }
  void save(const HilbertVector& v) const {
    if (!path.empty()) save_vector(path, v, vector_format_for_path(path));
  }
};

double parse_q(const std::string& q) { return q == "inf" ? kInfinity : parse_double(q); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

json number(double x) { return std::isfinite(x) ? json(x) : json(format_double(x)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paley-Wiener approximation and Besov smoothness for self-adjoint operators"};
  app.require_subcommand(1);
  int exit_code = 0;

  // spectrum ------------------------------------------------------------
  OperatorArgs spec_op;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of D and their degeneracy groups");
  spec_op.attach(spectrum);
  spectrum->callback([&] {
    const auto dec = spec_op.decompose();
    json groups = json::array();
    for (const auto& g : dec.groups()) groups.push_back({{"value", dec.lambda(g.first)}, {"multiplicity", g.last - g.first}});
    print({{"operator", spec_op.parsed().describe()},
           {"dim", dec.dim()},
           {"eigenvalues", dec.eigenvalues()},
           {"input_eigenvalues", dec.input_eigenvalues()},
           {"groups", groups},
           {"eps_group", dec.eps_group()}});
  });

  // project -------------------------------------------------------------
  OperatorArgs proj_op;
  VectorArgs proj_vec;
  OutArgs proj_out;
  double proj_omega = 1.0;
  auto* project = app.add_subcommand("project", "projection onto PW_ω, best approximation and bandwidth");
  proj_op.attach(project);
  proj_vec.attach(project);
  proj_out.attach(project, "write P_ω f here");
  project->add_option("--omega", proj_omega, "band limit ω")->capture_default_str();
  project->callback([&] {
    const auto dec = proj_op.decompose();
    const auto f = proj_vec.load(dec.dim());
    const auto p = pw_project(dec, f, proj_omega);
    proj_out.save(p);
    json j{{"omega", proj_omega},
           {"norm", f.norm()},
           {"best_approx", best_approx(dec, f, proj_omega)},
           {"spectral_tail", spectral_tail(dec, f, proj_omega)},
           {"projection_norm", p.norm()}};
    if (f.norm() > 0.0) {
      const auto bw = bandwidth(dec, f);
      j["omega_f"] = bw.omega_f;
      j["k_sequence_last"] = bw.k_sequence.back();
    }
    print(j);
  });

  // besov ---------------------------------------------------------------
  OperatorArgs besov_op;
  VectorArgs besov_vec;
  BesovParams besov_params;
  std::string besov_q = "2", besov_flavor = "all", besov_domain = "seminorm";
  auto* besov = app.add_subcommand("besov", "Besov norms of f in each flavor");
  besov_op.attach(besov);
  besov_vec.attach(besov);
  besov->add_option("--alpha", besov_params.alpha, "smoothness α")->capture_default_str();
  besov->add_option("--q", besov_q, "summability q in [1, inf]")->capture_default_str();
  besov->add_option("--r", besov_params.r, "order r > α")->capture_default_str();
  besov->add_option("--a", besov_params.a, "dyadic base a > 1")->capture_default_str();
  besov->add_option("--flavor", besov_flavor,
                    "integral_E, discrete_E, integral_R, discrete_R, k_functional, modulus or all")
      ->capture_default_str();
  besov->add_option("--domain-norm", besov_domain, "seminorm or graph_norm (k_functional flavor)")
      ->check(CLI::IsMember({"seminorm", "graph_norm"}))
      ->capture_default_str();
  besov->callback([&] {
    const auto dec = besov_op.decompose();
    const auto f = besov_vec.load(dec.dim());
    besov_params.q = parse_q(besov_q);
    besov_params.domain_norm = besov_domain == "graph_norm" ? DomainNorm::graph_norm : DomainNorm::seminorm;
    std::vector<BesovFlavor> flavors;
    if (besov_flavor == "all")
      flavors = {BesovFlavor::integral_E, BesovFlavor::discrete_E,   BesovFlavor::integral_R,
                 BesovFlavor::discrete_R, BesovFlavor::k_functional, BesovFlavor::modulus};
    else
      flavors = {besov_flavor_from_string(besov_flavor)};
    json norms = json::object();
    for (auto fl : flavors) {
      besov_params.flavor = fl;
      norms[to_string(fl)] = besov_norm(dec, f, besov_params);
    }
    print({{"alpha", besov_params.alpha}, {"q", besov_q}, {"r", besov_params.r}, {"a", besov_params.a}, {"norms", norms}});
  });

  // decompose -----------------------------------------------------------
  OperatorArgs dec_op;
  VectorArgs dec_vec;
  double dec_a = 2.0, dec_alpha = 1.0;
  std::string dec_q = "2", dec_prefix;
  auto* decompose = app.add_subcommand("decompose", "dyadic band decomposition and frame norm");
  dec_op.attach(decompose);
  dec_vec.attach(decompose);
  decompose->add_option("--a", dec_a, "dyadic base a > 1")->capture_default_str();
  decompose->add_option("--alpha", dec_alpha, "smoothness α")->capture_default_str();
  decompose->add_option("--q", dec_q, "summability q in [1, inf]")->capture_default_str();
  decompose->add_option("--out-prefix", dec_prefix, "write band k to PREFIX<k>.csv");
  decompose->callback([&] {
    const auto dec = dec_op.decompose();
    const auto f = dec_vec.load(dec.dim());
    const auto bd = band_decompose(dec, f, dec_a);
    const double q = parse_q(dec_q);
    json norms = json::array();
    for (std::size_t k = 0; k < bd.bands.size(); ++k) {
      norms.push_back(bd.bands[k].norm());
      if (!dec_prefix.empty()) save_vector(dec_prefix + std::to_string(k) + ".csv", bd.bands[k], VectorFormat::csv);
    }
    json j{{"a", dec_a}, {"band_norms", norms}, {"frame_norm", frame_norm(bd, dec_alpha, q)}};
    if (f.norm() > 0.0) {
      const auto eq = equivalence_report(dec, f, dec_alpha, q, dec_a);
      j["besov_norm"] = eq.besov_norm;
      j["ratio_lo"] = eq.ratio_lo;
      j["ratio_hi"] = eq.ratio_hi;
    }
    print(j);
  });

  // riesz ---------------------------------------------------------------
  OperatorArgs riesz_op;
  VectorArgs riesz_vec;
  OutArgs riesz_out;
  double riesz_omega = 1.0;
  long riesz_K = 10000;
  int riesz_power = 1;
  auto* riesz = app.add_subcommand("riesz", "Riesz interpolation operator and its identity on PW_ω");
  riesz_op.attach(riesz);
  riesz_vec.attach(riesz);
  riesz_out.attach(riesz, "write R^ω f here");
  riesz->add_option("--omega", riesz_omega, "band limit ω > 0")->capture_default_str();
  riesz->add_option("--K", riesz_K, "series truncation |k| ≤ K")->capture_default_str();
  riesz->add_option("--power", riesz_power, "n in (iD)^n f = (R^ω)^n f")->capture_default_str();
  riesz->callback([&] {
    const auto dec = riesz_op.decompose();
    const auto f = riesz_vec.load(dec.dim());
    const RieszConfig cfg{riesz_omega, riesz_K};
    const auto rf = riesz_apply(dec, f, cfg);
    riesz_out.save(rf);
    json j{{"omega", riesz_omega}, {"K", riesz_K}, {"norm_ratio", rf.norm() / (riesz_omega * f.norm())},
           {"tail_bound", cfg.tail_bound()}};
    const auto p = pw_project(dec, f, riesz_omega);
    if (p.norm() > 0.0) j["identity_residual_on_projection"] = riesz_identity_check(dec, p, riesz_omega, riesz_power, riesz_K).residual;
    print(j);
  });

  // jackson -------------------------------------------------------------
  OperatorArgs jack_op;
  VectorArgs jack_vec;
  OutArgs jack_out;
  double jack_omega = 1.0;
  int jack_m = 2, jack_k = 0, jack_n = 0;
  auto* jackson = app.add_subcommand("jackson", "quasi-interpolant Q f and the Jackson bound");
  jack_op.attach(jackson);
  jack_vec.attach(jackson);
  jack_out.attach(jackson, "write Q f here");
  jackson->add_option("--omega", jack_omega, "band limit ω > 0")->capture_default_str();
  jackson->add_option("--m", jack_m, "difference order m ≥ 1")->capture_default_str();
  jackson->add_option("--k", jack_k, "derivative order 0 ≤ k ≤ m")->capture_default_str();
  jackson->add_option("--n", jack_n, "kernel order (even; 0: smallest even n ≥ m + 4)")->capture_default_str();
  jackson->callback([&] {
    const auto dec = jack_op.decompose();
    const auto f = jack_vec.load(dec.dim());
    const int n = jack_n > 0 ? jack_n : default_kernel_order(jack_m);
    const auto h = build_kernel(n, jack_m);
    jack_out.save(q_apply(dec, f, jack_omega, jack_m, h));
    const auto rep = jackson_check(dec, f, jack_omega, jack_m, jack_k, h);
    print({{"n", n},
           {"best_approx", rep.best_approx},
           {"q_error", rep.q_error},
           {"constant", number(rep.constant)},
           {"constant_proof", number(rep.constant_proof)},
           {"modulus", rep.modulus},
           {"bound", number(rep.bound)},
           {"ratio", number(rep.ratio)},
           {"passed", rep.passed}});
  });

  // verify --------------------------------------------------------------
  OperatorArgs ver_op;
  CorpusParams corpus;
  std::vector<std::string> ver_checks;
  std::vector<std::string> ver_tols;
  std::string ver_format = "json", ver_out, ver_corpus_dir;
  auto* verify = app.add_subcommand("verify", "run the verification suite; exit status 0 iff every check passes");
  ver_op.attach(verify);
  verify->add_option("--count", corpus.count, "corpus members per size")->capture_default_str();
  verify->add_option("--seed", corpus.seed, "corpus seed")->capture_default_str();
  verify->add_option("--sizes", corpus.sizes, "operator sizes N (resizable builtins only)")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--checks", ver_checks, "checks to run, comma separated (default: all)")->delimiter(',');
  verify->add_option("--tol", ver_tols, "tolerance override CHECK[/QUANTITY]=VALUE (repeatable)");
  verify->add_option("--format", ver_format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("--out", ver_out, "report file (default: stdout)");
  verify->add_option("--save-corpus", ver_corpus_dir, "write each member vector to DIR/<seed>.csv");
  verify->callback([&] {
    for (const auto& t : ver_tols) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidParams, "--tol expects CHECK=VALUE");
      corpus.tolerance_overrides[t.substr(0, eq)] = parse_double(t.substr(eq + 1));
    }
    const auto spec = ver_op.parsed();
    const auto rep = run_suite(spec, corpus, ver_checks.empty() ? all_checks() : ver_checks);
    const auto fmt = report_format_from_string(ver_format);
    if (ver_out.empty())
      emit_report(rep, fmt, std::cout);
    else
      emit_report(rep, fmt, ver_out);
    if (!ver_corpus_dir.empty()) {
      std::filesystem::create_directories(ver_corpus_dir);
      std::size_t i = 0;
      for (auto n : rep.corpus.sizes)
        for (std::size_t c = 0; c < corpus.count; ++c, ++i) {
          const auto seed = rep.corpus.member_seeds[i];
          save_vector(ver_corpus_dir + "/" + std::to_string(seed) + ".csv", corpus_vector(seed, n), VectorFormat::csv);
        }
    }
    exit_code = rep.passed() ? 0 : 1;
  });

  // report --------------------------------------------------------------
  std::string rep_in, rep_format = "csv", rep_out;
  auto* report = app.add_subcommand("report", "re-emit a saved JSON report; exit status 0 iff it passed");
  report->add_option("--in", rep_in, "JSON report written by verify")->required();
  report->add_option("--format", rep_format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  report->add_option("--out", rep_out, "output file (default: stdout)");
  report->callback([&] {
    std::ifstream in(rep_in);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + rep_in + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    const auto rep = report_from_json(j);
    const auto fmt = report_format_from_string(rep_format);
    if (rep_out.empty())
      emit_report(rep, fmt, std::cout);
    else
      emit_report(rep, fmt, rep_out);
    exit_code = rep.passed() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
