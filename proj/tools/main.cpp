// fhankel: command-line front end for the library.
//
// Subcommands
//   verify      run the pinned identity suite, emit a JSON/CSV report
//   kernel      evaluate the closed half-line kernel at one point
//   transform   apply the dual transform to a coefficient vector (two routes)
//   spectrum    singular values, Schatten partial sums, decay fit
//   nullspace   null-space indices for a given y, a zero scan, or random probes
//   quadrature  dump quadrature nodes and weights
//
// Exit codes: 0 success, 1 a verification-style check failed, 2 bad
// configuration (unknown flag, domain violation, malformed input).
//
// Reports embed the library version, the full parameter set, and the seed;
// identical invocations produce byte-identical output.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fhankel/fhankel.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fhankel;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json quat_json(const Quaternion& q) {
  return json{{"w", q.w}, {"x", q.x}, {"y", q.y}, {"z", q.z}};
}

struct CommonConfig {
  double alpha = 0.5;
  double beta = 1.0;
  double eta = 2.0;
  double y = 0.7;
  int trunc = 0;  // 0 = per-command default
  double tol = 0.0;
  unsigned seed = 12345;
  std::string format = "json";
  std::string out;
};

json report_header(const char* command, const CommonConfig& cfg) {
  json j;
  j["version"] = version_string;
  j["command"] = command;
  j["params"] = {{"alpha", cfg.alpha},
                 {"beta", cfg.beta},
                 {"eta", cfg.eta},
                 {"y", cfg.y}};
  j["seed"] = cfg.seed;
  return j;
}

void csv_header(std::ostream& os, const char* command, const CommonConfig& cfg) {
  os << "# version=" << version_string << " command=" << command
     << " alpha=" << fmt17(cfg.alpha) << " beta=" << fmt17(cfg.beta)
     << " eta=" << fmt17(cfg.eta) << " y=" << fmt17(cfg.y)
     << " seed=" << cfg.seed << "\n";
}

void emit(const CommonConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
  f << text;
}

Quaternion parse_axis(const std::string& spec) {
  if (spec == "i") return quat_i;
  if (spec == "j") return quat_j;
  if (spec == "k") return quat_k;
  double a[3];
  if (std::sscanf(spec.c_str(), "%lf,%lf,%lf", &a[0], &a[1], &a[2]) != 3) {
    throw std::domain_error("axis must be i, j, k, or ax,ay,az");
  }
  const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (n == 0.0) throw std::domain_error("axis must be a nonzero imaginary direction");
  return Quaternion{0.0, a[0] / n, a[1] / n, a[2] / n};
}

std::vector<Quaternion> parse_coeffs(const std::string& spec) {
  std::vector<Quaternion> c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::domain_error("bad coefficient: " + item);
    c.push_back(Quaternion{v});
  }
  if (c.empty()) throw std::domain_error("empty coefficient list");
  return c;
}

// ---------------------------------------------------------------------------

int cmd_verify(const CommonConfig& cfg, const std::string& checks) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.tol_override = cfg.tol;
  opts.filter = checks;
  const std::vector<CheckResult> results = run_verify_checks(opts);

  int failed = 0;
  for (const CheckResult& c : results) {
    if (!c.pass) {
      ++failed;
      std::cerr << "FAILED: " << c.name << " (measured " << fmt17(c.measured)
                << " > tolerance " << fmt17(c.tolerance) << ")\n";
    }
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "verify", cfg);
    os << "name,measured,tolerance,pass\n";
    for (const CheckResult& c : results) {
      os << c.name << "," << fmt17(c.measured) << "," << fmt17(c.tolerance)
         << "," << (c.pass ? 1 : 0) << "\n";
    }
    emit(cfg, os.str());
  } else {
    json j = report_header("verify", cfg);
    if (cfg.tol > 0.0) j["tol_override"] = cfg.tol;
    if (!checks.empty()) j["filter"] = checks;
    j["checks"] = json::array();
    for (const CheckResult& c : results) {
      j["checks"].push_back({{"name", c.name},
                             {"measured", c.measured},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass},
                             {"detail", c.detail}});
    }
    j["total"] = results.size();
    j["failed"] = failed;
    emit(cfg, j.dump(2) + "\n");
  }
  return failed == 0 ? 0 : 1;
}

int cmd_kernel(const CommonConfig& cfg, double x, double qr, double qi,
               const std::string& axis_spec) {
  const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
  const Quaternion axis = parse_axis(axis_spec);
  const Quaternion q = embed(axis, std::complex<double>(qr, qi));
  const Quaternion value = hankel_kernel_closed(q, x, cfg.y, cfg.alpha);

  json j = report_header("kernel", cfg);
  j["x"] = x;
  j["q"] = quat_json(q);
  j["value"] = quat_json(value);
  if (cfg.trunc > 0) {
    const Quaternion series = hankel_kernel_series(q, x, cfg.y, cfg.alpha, cfg.trunc);
    j["series_terms"] = cfg.trunc;
    j["series_value"] = quat_json(series);
    j["series_gap"] = abs(value - series);
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "kernel", cfg);
    os << "w,x,y,z\n"
       << fmt17(value.w) << "," << fmt17(value.x) << "," << fmt17(value.y)
       << "," << fmt17(value.z) << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_transform(const CommonConfig& cfg, const std::string& coeff_spec,
                  double qr, double qi, const std::string& axis_spec) {
  const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
  const Quaternion axis = parse_axis(axis_spec);
  const Quaternion q = embed(axis, std::complex<double>(qr, qi));
  if (abs(q) >= 1.0) throw std::domain_error("transform point must satisfy |q| < 1");

  LaguerreCoeffs f;
  f.alpha = cfg.alpha;
  f.a = parse_coeffs(coeff_spec);

  const MonomialCoeffs sf = dual_transform_spectral(f, cfg.y);
  const Quaternion spectral = eval_monomial_expansion(sf, q);

  const int nodes = cfg.trunc > 0 ? cfg.trunc : 200;
  const QuadratureRule rule = gauss_laguerre(nodes, cfg.alpha);
  const Quaternion quad = dual_transform_quadrature(
      [&](double x) { return eval_laguerre_expansion(f, x); }, cfg.y, cfg.alpha,
      rule, q);

  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "transform", cfg);
    os << "route,w,x,y,z\n";
    os << "spectral," << fmt17(spectral.w) << "," << fmt17(spectral.x) << ","
       << fmt17(spectral.y) << "," << fmt17(spectral.z) << "\n";
    os << "quadrature," << fmt17(quad.w) << "," << fmt17(quad.x) << ","
       << fmt17(quad.y) << "," << fmt17(quad.z) << "\n";
    emit(cfg, os.str());
  } else {
    json j = report_header("transform", cfg);
    j["q"] = quat_json(q);
    j["coefficients"] = parse_coeffs(coeff_spec).size();
    j["quadrature_nodes"] = nodes;
    j["value_spectral"] = quat_json(spectral);
    j["value_quadrature"] = quat_json(quad);
    j["route_gap"] = abs(spectral - quad);
    emit(cfg, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_spectrum(const CommonConfig& cfg, double p) {
  const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
  const int n = cfg.trunc > 0 ? cfg.trunc : 40;
  const std::vector<double> sigma = singular_values_closed(cfg.y, params, n - 1);
  const SchattenReport sch = schatten_report(cfg.y, params, p, 4096);
  const DecayFit fit = decay_fit(cfg.y, params, 500, 4000);

  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "spectrum", cfg);
    os << "n,sigma\n";
    for (int k = 0; k < n; ++k) {
      os << k << "," << fmt17(sigma[static_cast<std::size_t>(k)]) << "\n";
    }
    emit(cfg, os.str());
  } else {
    json j = report_header("spectrum", cfg);
    j["truncation"] = n;
    j["singular_values"] = sigma;
    json sj = {{"p", p},
               {"tail_mean", sch.tail_mean},
               {"tail_converged", sch.tail_converged},
               {"block_slope", sch.block_slope},
               {"blocks_nondecaying", sch.blocks_nondecaying},
               {"partial_sums", sch.partial_sums},
               {"partial_at", sch.partial_at}};
    if (sch.threshold_valid) sj["threshold"] = sch.threshold;
    j["schatten"] = sj;
    j["decay_fit"] = {{"n_lo", 500}, {"n_hi", 4000}, {"slope", fit.slope},
                      {"intercept", fit.intercept}};
    emit(cfg, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_nullspace(const CommonConfig& cfg, int zeros_of, int scan) {
  const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
  const int n = cfg.trunc > 0 ? cfg.trunc : 50;
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;

  const auto row_for = [&](double y) {
    const std::vector<int> idx = null_space_indices(y, cfg.alpha, n, tol);
    const RangeBasisReport rep = range_basis_report(y, cfg.alpha, n);
    json row;
    row["y"] = y;
    row["indices"] = idx;
    row["dim"] = idx.size();
    row["strict_inclusion"] = rep.strict_inclusion;
    row["surviving"] = rep.surviving.size();
    return row;
  };

  json j = report_header("nullspace", cfg);
  j["truncation"] = n;
  j["tolerance"] = tol;
  int exit_code = 0;

  if (scan > 0) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    int nonempty = 0;
    json hits = json::array();
    for (int k = 0; k < scan; ++k) {
      const double y = u(rng);
      if (!null_space_indices(y, cfg.alpha, n, tol).empty()) {
        ++nonempty;
        hits.push_back(y);
      }
    }
    j["scan_draws"] = scan;
    j["scan_nonempty"] = nonempty;
    j["scan_hits"] = hits;
    if (nonempty > 0) exit_code = 1;
  } else if (zeros_of > 0) {
    const std::vector<double> zeros = laguerre_zeros(zeros_of, cfg.alpha);
    j["zeros_of_degree"] = zeros_of;
    j["rows"] = json::array();
    for (double z : zeros) j["rows"].push_back(row_for(z));
  } else {
    j["rows"] = json::array({row_for(cfg.y)});
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "nullspace", cfg);
    os << "y,dim,indices,strict_inclusion\n";
    if (j.contains("rows")) {
      for (const auto& row : j["rows"]) {
        os << fmt17(row["y"].get<double>()) << "," << row["dim"].get<std::size_t>()
           << ",";
        std::string sep;
        for (const auto& i : row["indices"]) {
          os << sep << i.get<int>();
          sep = "|";
        }
        os << "," << (row["strict_inclusion"].get<bool>() ? 1 : 0) << "\n";
      }
    } else {
      os << "# scan_draws=" << scan << " scan_nonempty="
         << j["scan_nonempty"].get<int>() << "\n";
    }
    emit(cfg, os.str());
  } else {
    emit(cfg, j.dump(2) + "\n");
  }
  return exit_code;
}

int cmd_quadrature(const CommonConfig& cfg, const std::string& kind, int radial,
                   int angular) {
  const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
  std::vector<double> nodes, weights;
  json extra;
  if (kind == "laguerre") {
    const int n = cfg.trunc > 0 ? cfg.trunc : default_halfline_nodes;
    const QuadratureRule rule = gauss_laguerre(n, cfg.alpha);
    nodes = rule.nodes;
    weights = rule.weights;
  } else if (kind == "jacobi") {
    const int n = cfg.trunc > 0 ? cfg.trunc : 64;
    const QuadratureRule rule = gauss_jacobi_unit(n, cfg.beta, cfg.eta);
    nodes = rule.nodes;
    weights = rule.weights;
  } else if (kind == "disk") {
    const DiskRule rule = disk_rule(radial, angular, cfg.beta, cfg.eta);
    nodes = rule.t;
    for (int jr = 0; jr < rule.nr; ++jr) weights.push_back(rule.node_weight(jr));
    extra["ntheta"] = rule.ntheta;
  } else {
    throw std::domain_error("quadrature kind must be laguerre, jacobi, or disk");
  }

  if (cfg.format == "csv") {
    std::ostringstream os;
    csv_header(os, "quadrature", cfg);
    os << "node,weight\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      os << fmt17(nodes[i]) << "," << fmt17(weights[i]) << "\n";
    }
    emit(cfg, os.str());
  } else {
    json j = report_header("quadrature", cfg);
    j["kind"] = kind;
    j["count"] = nodes.size();
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["nodes"] = nodes;
    j["weights"] = weights;
    emit(cfg, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fhankel: dual fractional Hankel transform toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file (flags override)");

  CommonConfig cfg;
  app.add_option("--alpha", cfg.alpha, "half-line weight exponent (> -1)")
      ->capture_default_str();
  app.add_option("--beta", cfg.beta, "ball weight parameter (> 0)")
      ->capture_default_str();
  app.add_option("--eta", cfg.eta, "ball weight parameter (> 0)")
      ->capture_default_str();
  app.add_option("--y", cfg.y, "frozen kernel argument (>= 0)")
      ->capture_default_str();
  app.add_option("--trunc", cfg.trunc, "truncation / node count (0 = default)")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "tolerance override (0 = pinned defaults)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized draws")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write the report to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run the pinned identity suite");
  std::string checks;
  verify->add_option("--checks", checks, "substring filter on check names");

  auto* kernel = app.add_subcommand("kernel", "evaluate the closed kernel R_q(x, y)");
  double kx = 1.0, qr = 0.3, qi = 0.2;
  std::string axis = "i";
  kernel->add_option("--x", kx, "first kernel argument (>= 0)")
      ->capture_default_str();
  kernel->add_option("--qr", qr, "Re q on the slice")->capture_default_str();
  kernel->add_option("--qi", qi, "Im q on the slice (>= 0)")
      ->capture_default_str();
  kernel->add_option("--axis", axis, "slice axis: i, j, k, or ax,ay,az")
      ->capture_default_str();

  auto* transform =
      app.add_subcommand("transform", "apply the dual transform to coefficients");
  std::string coeffs = "1";
  transform->add_option("--coeffs", coeffs,
                        "comma-separated real Laguerre-basis coefficients")
      ->capture_default_str();
  transform->add_option("--qr", qr, "Re q on the slice")->capture_default_str();
  transform->add_option("--qi", qi, "Im q on the slice (>= 0)")
      ->capture_default_str();
  transform->add_option("--axis", axis, "slice axis: i, j, k, or ax,ay,az")
      ->capture_default_str();

  auto* spectrum =
      app.add_subcommand("spectrum", "singular values, Schatten sums, decay fit");
  double p = 2.0;
  spectrum->add_option("--p", p, "Schatten exponent (> 0)")->capture_default_str();

  auto* nullspace =
      app.add_subcommand("nullspace", "null-space structure of the transform");
  int zeros_of = 0, scan = 0;
  nullspace->add_option("--zeros-of", zeros_of,
                        "report at each zero of the degree-n Laguerre polynomial");
  nullspace->add_option("--scan", scan,
                        "probe n random y values; exit 1 on any nonempty null space");

  auto* quadrature =
      app.add_subcommand("quadrature", "dump quadrature nodes and weights");
  std::string kind = "laguerre";
  int radial = default_disk_radial, angular = default_disk_angular;
  quadrature->add_option("--kind", kind, "laguerre, jacobi, or disk")
      ->check(CLI::IsMember({"laguerre", "jacobi", "disk"}))
      ->capture_default_str();
  quadrature->add_option("--radial", radial, "disk rule: radial node count")
      ->capture_default_str();
  quadrature->add_option("--angular", angular, "disk rule: angular node count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // Shared domain validation; individual commands add their own checks.
    const Params params(cfg.alpha, cfg.beta, cfg.eta, cfg.y);
    (void)params;
    if (p <= 0.0) throw std::domain_error("p must be positive");
    if (cfg.trunc < 0) throw std::domain_error("trunc must be >= 0");

    if (*verify) return cmd_verify(cfg, checks);
    if (*kernel) return cmd_kernel(cfg, kx, qr, qi, axis);
    if (*transform) return cmd_transform(cfg, coeffs, qr, qi, axis);
    if (*spectrum) return cmd_spectrum(cfg, p);
    if (*nullspace) return cmd_nullspace(cfg, zeros_of, scan);
    if (*quadrature) return cmd_quadrature(cfg, kind, radial, angular);
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: require_subcommand(1)
}
