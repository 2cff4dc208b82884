// Copyright 2026 The entbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// entbound: command-line front end.
//
//   entbound measures state.json [--basis-file u.json]
//   entbound sample-gap --samples 100000 --seed 7 [--bin-width 0.001]
//   entbound region --resolution 151
//   entbound bound-single --measure eof --constraint nt
//   entbound compare-regions --measure tangle
//   entbound bound-double --measure eof --grid 150x150 --out surf/
//   entbound query --surface surf/ 1.2 0.8
//   entbound verify --suite all --samples 1000
//   entbound spectrum --mu 0.4,0.3,0.2,0.1
//
// Exit codes: 0 ok, 1 verification failure or coverage warning, 2 usage,
// 3 I/O or parse error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entbound/error.hpp"
#include "entbound/io.hpp"
#include "entbound/measures.hpp"
#include "entbound/region.hpp"
#include "entbound/single_bounds.hpp"
#include "entbound/spectral.hpp"
#include "entbound/states.hpp"
#include "entbound/surface.hpp"
#include "entbound/verify.hpp"
#include "entbound/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace entbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIO = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  int threads = 0;  // 0: all cores
};

// Columnar output; cells are numbers or labels.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::variant<double, std::string>>> rows;

  std::string csv() const {
    std::string s;
    for (std::size_t k = 0; k < header.size(); ++k) s += (k ? "," : "") + header[k];
    s += '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) s += ',';
        if (const double* v = std::get_if<double>(&row[k])) {
          s += fmt(*v);
        } else {
          s += std::get<std::string>(row[k]);
        }
      }
      s += '\n';
    }
    return s;
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (const double* v = std::get_if<double>(&row[k])) {
          obj[header[k]] = *v;
        } else {
          obj[header[k]] = std::get<std::string>(row[k]);
        }
      }
      arr.push_back(std::move(obj));
    }
    return arr;
  }
};

// Collects artifacts for one run and writes them with a manifest when --out
// is set; otherwise the primary artifact goes to stdout.
class Run {
 public:
  Run(std::string command, const Globals& g)
      : command_(std::move(command)), g_(g), start_(std::chrono::steady_clock::now()) {}

  json& params() { return params_; }

  void emit(const std::string& name, const std::string& content) {
    if (g_.out.empty()) {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') std::cout << '\n';
      return;
    }
    fs::create_directories(g_.out);
    write_file_atomic((fs::path(g_.out) / name).string(), content);
    files_.push_back(name);
  }

  void emit_table(const std::string& stem, const Table& t) {
    if (g_.format == "json") {
      emit(stem + ".json", t.to_json().dump(2) + "\n");
    } else {
      emit(stem + ".csv", t.csv());
    }
  }

  // Files written by library code into the output directory.
  void record(const std::string& name) { files_.push_back(name); }

  void finish() {
    if (g_.out.empty()) return;
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json m = {{"command", command_},     {"parameters", params_}, {"seed", g_.seed},
              {"version", kVersion},     {"wall_time_s", wall},  {"outputs", files_},
              {"timestamp", utc_timestamp()}};
    fs::create_directories(g_.out);
    write_file_atomic((fs::path(g_.out) / "run_manifest.json").string(), m.dump(2) + "\n");
  }

 private:
  std::string command_;
  const Globals& g_;
  std::chrono::steady_clock::time_point start_;
  json params_ = json::object();
  std::vector<std::string> files_;
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::IOError:
    case ErrorCode::ParseError:
      return kExitIO;
    case ErrorCode::ConvergenceFailure:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

AngularMomentumBasis load_basis(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("unitary") || !doc["unitary"].is_array()) {
    throw Error(ErrorCode::ParseError, path + ": expected {\"unitary\": [[...], ...]}");
  }
  const json& rows = doc["unitary"];
  const std::size_t n = rows.size();
  std::vector<cplx> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ParseError, path + ": unitary must be square");
    }
    for (const auto& z : row) {
      if (z.is_number()) {
        entries.emplace_back(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
      } else {
        throw Error(ErrorCode::ParseError, path + ": bad entry " + z.dump());
      }
    }
  }
  return AngularMomentumBasis::from_unitary(ComplexMatrix(n, n, std::move(entries)));
}

// --- commands ---------------------------------------------------------------

int cmd_measures(const Globals& g, const std::string& state_file, const std::string& basis_file) {
  Run run("measures", g);
  run.params() = {{"state", state_file}, {"basis_file", basis_file}};
  const AnyState state = load_state(state_file);
  const std::optional<AngularMomentumBasis> basis =
      basis_file.empty() ? std::nullopt : std::optional(load_basis(basis_file));

  auto try_phi = [&](const DensityMatrix& rho, const AngularMomentumBasis& b) -> std::optional<double> {
    if (rho.dim_b % 2 != 0 || std::min(rho.dim_a, rho.dim_b) <= 2) return std::nullopt;
    return phi_negativity(rho, b);
  };

  json report;
  if (const auto* psi = std::get_if<PureState>(&state)) {
    const SchmidtDecomposition sd = schmidt_decompose(*psi);
    const DensityMatrix rho = to_density(*psi);
    const auto& mu = sd.coefficients;
    // Pure inputs default to the Schmidt-aligned basis.
    const AngularMomentumBasis b = basis ? *basis : schmidt_aligned_basis(sd);
    report["kind"] = "pure";
    report["basis"] = basis ? "file" : "schmidt-aligned";
    report["mu"] = mu.values();
    report["n_t"] = pure_negativity(mu);
    report["n_phi"] = nullable(try_phi(rho, b));
    report["n_hat_phi"] = mu.size() == 4 ? json(nhat_phi(mu)) : json(nullptr);
    report["eof"] = eof_pure(mu);
    report["tangle"] = tangle_pure(mu);
    report["concurrence"] = concurrence_pure(mu);
  } else {
    const auto& rho = std::get<DensityMatrix>(state);
    const AngularMomentumBasis b = basis ? *basis : AngularMomentumBasis::identity(rho.dim_b);
    report["kind"] = "mixed";
    report["basis"] = basis ? "file" : "identity";
    report["n_t"] = negativity(rho);
    report["n_phi"] = nullable(try_phi(rho, b));
  }
  run.emit("measures.json", report.dump(2) + "\n");
  run.finish();
  return kExitOk;
}

int cmd_sample_gap(const Globals& g, std::size_t samples, double bin_width, const std::string& basis) {
  if (samples < 1) throw Error(ErrorCode::DomainError, "--samples must be >= 1");
  if (!(bin_width > 0.0)) throw Error(ErrorCode::DomainError, "--bin-width must be > 0");
  Run run("sample-gap", g);
  run.params() = {{"samples", samples}, {"bin_width", bin_width}, {"basis", basis}};

  Rng rng(g.seed);
  std::vector<double> diffs;
  diffs.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const PureState psi = haar_random_pure(4, 4, rng);
    const SchmidtDecomposition sd = schmidt_decompose(psi);
    const AngularMomentumBasis b =
        basis == "aligned" ? schmidt_aligned_basis(sd) : AngularMomentumBasis::identity(4);
    diffs.push_back(nhat_phi(sd.coefficients) - phi_negativity(to_density(psi), b));
  }
  const auto [lo, hi] = std::minmax_element(diffs.begin(), diffs.end());
  const auto first = static_cast<long long>(std::floor(*lo / bin_width));
  const auto last = static_cast<long long>(std::floor(*hi / bin_width));
  std::vector<std::size_t> counts(static_cast<std::size_t>(last - first + 1), 0);
  for (double d : diffs) {
    ++counts[static_cast<std::size_t>(static_cast<long long>(std::floor(d / bin_width)) - first)];
  }
  Table t{{"bin_left", "frequency"}, {}};
  for (std::size_t k = 0; k < counts.size(); ++k)
    t.rows.push_back({(first + static_cast<long long>(k)) * bin_width, static_cast<double>(counts[k])});

  const auto negative = std::count_if(diffs.begin(), diffs.end(), [](double d) { return d < -1e-9; });
  const json summary = {{"samples", samples},
                        {"min_diff", *lo},
                        {"max_diff", *hi},
                        {"negative_count", negative}};
  run.emit_table("gap_histogram", t);
  if (g.out.empty()) {
    std::cerr << summary.dump() << '\n';
  } else {
    run.emit("gap_summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump() << '\n';
  }
  run.finish();
  return kExitOk;
}

int cmd_region(const Globals& g, int resolution) {
  if (resolution < 2) throw Error(ErrorCode::DomainError, "--resolution must be >= 2");
  Run run("region", g);
  run.params() = {{"resolution", resolution}};
  Table t{{"n_hat_phi", "n_t_lower", "n_t_upper"}, {}};
  for (const auto& r : boundary_table(resolution)) t.rows.push_back({r.n_hat_phi, r.n_t_lower, r.n_t_upper});
  run.emit_table("region", t);
  run.finish();
  return kExitOk;
}

int cmd_bound_single(const Globals& g, Measure m, Constraint c, int resolution) {
  if (resolution < 2) throw Error(ErrorCode::DomainError, "--resolution must be >= 2");
  Run run("bound-single", g);
  run.params() = {{"measure", to_string(m)}, {"constraint", to_string(c)}, {"resolution", resolution}};
  Table t{{"input", "bound"}, {}};
  for (int k = 0; k < resolution; ++k) {
    const double x = kConstraintMax * k / (resolution - 1);
    t.rows.push_back({x, single_bound(m, c, x)});
  }
  run.emit_table("bound_single", t);
  run.finish();
  return kExitOk;
}

int cmd_compare_regions(const Globals& g, Measure m, int resolution, bool split) {
  if (resolution < 2) throw Error(ErrorCode::DomainError, "--resolution must be >= 2");
  Run run("compare-regions", g);
  run.params() = {{"measure", to_string(m)}, {"resolution", resolution}, {"split", split}};
  if (split) {
    Table t{{"n_hat_phi", "n_t_split"}, {}};
    for (int i = 0; i < resolution; ++i) {
      const double x = kConstraintMax * i / (resolution - 1);
      t.rows.push_back({x, region_split(m, x)});
    }
    run.emit_table("region_split", t);
    run.finish();
    return kExitOk;
  }
  Table t{{"n_hat_phi", "n_t", "better"}, {}};
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const MeasurePoint p{kConstraintMax * i / (resolution - 1), kConstraintMax * j / (resolution - 1)};
      if (!in_pure_region(p, 1e-12)) continue;
      t.rows.push_back({p.n_hat_phi, p.n_t, std::string(to_string(better_constraint(m, p)))});
    }
  }
  run.emit_table("compare_regions", t);
  run.finish();
  return kExitOk;
}

std::pair<int, int> parse_grid(const std::string& s) {
  int nx = 0;
  int ny = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%dx%d%c", &nx, &ny, &tail) != 2 || nx < 2 || ny < 2) {
    throw Error(ErrorCode::DomainError, "--grid expects <nx>x<ny> with both >= 2, got '" + s + "'");
  }
  return {nx, ny};
}

int cmd_bound_double(const Globals& g, Measure m, const std::string& grid, int mu4_steps) {
  if (g.out.empty()) throw Error(ErrorCode::DomainError, "bound-double needs --out <dir>");
  if (mu4_steps < 2) throw Error(ErrorCode::DomainError, "--mu4-steps must be >= 2");
  const auto [nx, ny] = parse_grid(grid);
  Run run("bound-double", g);
  SurfaceParams params;
  params.nx = nx;
  params.ny = ny;
  params.mu4_steps = mu4_steps;
  params.seed = g.seed;
  params.threads = g.threads > 0 ? g.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  run.params() = {{"measure", to_string(m)}, {"grid", grid}, {"mu4_steps", mu4_steps}, {"threads", params.threads}};

  const SurfaceBuild b = build_bound_surface(m, params);
  save_surface(b.surface, g.out);
  run.record("surface.csv");
  run.record("manifest.json");
  run.finish();

  const CoverageReport& cov = b.surface.provenance.coverage;
  const json summary = {{"measure", to_string(m)},
                        {"in_region", cov.in_region},
                        {"covered", cov.covered},
                        {"filled", cov.filled},
                        {"gap_fraction", cov.gap_fraction()},
                        {"monotone_change", b.monotone_change},
                        {"corner", query(b.surface, {kConstraintMax, kConstraintMax})}};
  std::cout << summary.dump() << '\n';
  if (cov.filled > 0) {
    std::cerr << "warning: " << cov.filled << " in-region nodes had no feasible branch and were filled\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_query(const Globals& g, const std::string& dir, double x, double y) {
  const BoundSurface s = load_surface(dir);
  const double v = query(s, {x, y});
  if (g.format == "json") {
    std::cout << json{{"measure", to_string(s.measure)}, {"n_hat_phi", x}, {"n_t", y}, {"value", v}}.dump()
              << '\n';
  } else {
    std::cout << fmt(v) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite, std::size_t samples) {
  Run run("verify", g);
  run.params() = {{"suite", suite}, {"samples", samples}};
  const VerifyReport report = run_verify(suite, samples, g.seed);
  run.emit("verify.json", report.to_json() + "\n");
  run.finish();
  for (const auto& c : report.checks) {
    if (!c.pass) std::cerr << "FAIL " << c.suite << ": " << c.name << " (" << fmt(c.value) << ")\n";
  }
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_spectrum(const Globals& g, const std::vector<double>& mu_in) {
  Run run("spectrum", g);
  run.params() = {{"mu", mu_in}};
  std::vector<double> mu = mu_in;
  std::sort(mu.begin(), mu.end(), std::greater<>());
  const SchmidtVector sv(mu);
  const std::size_t d = sv.size();
  const SpectrumSummary sp = predicted_spectrum(d, sv);
  const std::vector<double> predicted = sp.all();
  const std::vector<double> direct = hermitian_eigenvalues(
      apply_phi_B(to_density(make_schmidt_state(sv, d)), AngularMomentumBasis::identity(d)));
  double diff = 0.0;
  for (std::size_t k = 0; k < direct.size(); ++k) diff = std::max(diff, std::abs(direct[k] - predicted[k]));
  const json report = {{"D", d},
                       {"mu", sv.values()},
                       {"predicted",
                        {{"zero_count", sp.zero_count},
                         {"pair_eigenvalues", sp.pair_eigenvalues},
                         {"r_roots", sp.r_roots},
                         {"r_coefficients", r_poly_coeffs(d, sv)},
                         {"all", predicted}}},
                       {"direct", direct},
                       {"max_abs_diff", diff}};
  run.emit("spectrum.json", report.dump(2) + "\n");
  run.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on entanglement measures from negativity and Phi-negativity"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--out", g.out, "Output directory (stdout when omitted)");
  app.add_option("--format", g.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for surface builds (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  std::string measure_name = "eof";
  std::string constraint_name = "nt";
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", measure_name, "eof | tangle | concurrence")->capture_default_str();
  };

  int code = kExitOk;
  auto guarded = [&](auto fn) {
    return [&, fn] {
      try {
        code = fn();
      } catch (const Error& e) {
        std::cerr << "entbound: " << e.what() << '\n';
        code = exit_code_for(e.code());
      } catch (const fs::filesystem_error& e) {
        std::cerr << "entbound: " << e.what() << '\n';
        code = kExitIO;
      }
    };
  };
  auto measure = [&] {
    const auto m = parse_measure(measure_name);
    if (!m) throw Error(ErrorCode::DomainError, "unknown measure '" + measure_name + "'");
    return *m;
  };

  std::string state_file;
  std::string basis_file;
  auto* measures = app.add_subcommand("measures", "Measures of a state given as JSON");
  measures->add_option("state", state_file, "State JSON file")->required();
  measures->add_option("--basis-file", basis_file, "JSON {\"unitary\": [[...]]} for the B-side basis");
  measures->callback(guarded([&] { return cmd_measures(g, state_file, basis_file); }));

  std::size_t gap_samples = 100000;
  double bin_width = 0.001;
  std::string gap_basis = "identity";
  auto* gap = app.add_subcommand("sample-gap", "Histogram of n_hat_phi - n_phi over Haar 4x4 states");
  gap->add_option("--samples", gap_samples)->capture_default_str();
  gap->add_option("--bin-width", bin_width)->capture_default_str();
  gap->add_option("--basis", gap_basis, "identity | aligned")
      ->check(CLI::IsMember({"identity", "aligned"}))
      ->capture_default_str();
  gap->callback(guarded([&] { return cmd_sample_gap(g, gap_samples, bin_width, gap_basis); }));

  int resolution = 151;
  auto* region = app.add_subcommand("region", "Pure-state region boundaries");
  region->add_option("--resolution", resolution)->capture_default_str();
  region->callback(guarded([&] { return cmd_region(g, resolution); }));

  auto* single = app.add_subcommand("bound-single", "Singly-constrained bound curve");
  add_measure(single);
  single->add_option("--constraint", constraint_name, "nt | nphi")->capture_default_str();
  single->add_option("--resolution", resolution)->capture_default_str();
  single->callback(guarded([&] {
    const auto c = parse_constraint(constraint_name);
    if (!c) throw Error(ErrorCode::DomainError, "unknown constraint '" + constraint_name + "'");
    return cmd_bound_single(g, measure(), *c, resolution);
  }));

  auto* compare = app.add_subcommand("compare-regions", "Which single constraint gives the better bound");
  add_measure(compare);
  compare->add_option("--resolution", resolution)->capture_default_str();
  bool split = false;
  compare->add_flag("--split", split, "Emit the curve where both bounds agree instead of the map");
  compare->callback(guarded([&] { return cmd_compare_regions(g, measure(), resolution, split); }));

  std::string grid = "150x150";
  int mu4_steps = 101;
  auto* dbl = app.add_subcommand("bound-double", "Build and save the doubly-constrained bound surface");
  add_measure(dbl);
  dbl->add_option("--grid", grid, "<nx>x<ny>")->capture_default_str();
  dbl->add_option("--mu4-steps", mu4_steps)->capture_default_str();
  dbl->callback(guarded([&] { return cmd_bound_double(g, measure(), grid, mu4_steps); }));

  std::string surface_dir;
  double qx = 0.0;
  double qy = 0.0;
  auto* q = app.add_subcommand("query", "Evaluate a saved surface at (n_hat_phi, n_t)");
  q->add_option("--surface", surface_dir, "Surface directory")->required();
  q->add_option("n_hat_phi", qx)->required();
  q->add_option("n_t", qy)->required();
  q->callback(guarded([&] { return cmd_query(g, surface_dir, qx, qy); }));

  std::string suite = "all";
  std::size_t verify_samples = 1000;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--samples", verify_samples)->capture_default_str();
  verify->callback(guarded([&] { return cmd_verify(g, suite, verify_samples); }));

  std::vector<double> mu;
  auto* spectrum = app.add_subcommand("spectrum", "Predicted spectrum of (I x Phi)|psi><psi| for even D");
  spectrum->add_option("--mu", mu, "Schmidt coefficients")->required()->delimiter(',');
  spectrum->callback(guarded([&] { return cmd_spectrum(g, mu); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  return code;
}
