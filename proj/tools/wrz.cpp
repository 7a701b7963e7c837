// Command-line front end: reproducible experiments over the library modules
// with machine-readable CSV/JSON outputs.
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrz/acceptance.hpp"
#include "wrz/equilibrium.hpp"
#include "wrz/kacrice.hpp"
#include "wrz/kernel.hpp"
#include "wrz/orthonorm.hpp"
#include "wrz/sampling.hpp"
#include "wrz/weights.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kInf = std::numeric_limits<double>::infinity();

using json = nlohmann::ordered_json;

// All floats serialized with 17 significant digits so runs round-trip.
std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Output sink: stdout for "-", file otherwise.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
      os = &file;
    }
  }
  std::ostream& out() { return *os; }
};

json meta(const std::vector<std::pair<std::string, std::string>>& config) {
  json m;
  m["version"] = kVersion;
  json c;
  for (const auto& [k, v] : config) c[k] = v;
  m["config"] = c;
  return m;
}

void csv_header(std::ostream& os,
                const std::vector<std::pair<std::string, std::string>>& config) {
  os << "# version=" << kVersion << "\n";
  for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
}

std::vector<int> parse_degrees(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size() || n < 1) {
      throw CLI::ValidationError("--n", "bad degree '" + item + "'");
    }
    out.push_back(n);
  }
  if (out.empty()) throw CLI::ValidationError("--n", "empty degree list");
  return out;
}

// "lo:hi" pairs separated by commas.
std::vector<wrz::RegionSpec> parse_regions(const std::string& s) {
  std::vector<wrz::RegionSpec> out;
  if (s.empty()) return out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("--regions", "expected lo:hi, got '" + item + "'");
    }
    wrz::RegionSpec r;
    r.lo = std::stod(item.substr(0, colon));
    r.hi = std::stod(item.substr(colon + 1));
    if (!(r.lo <= r.hi)) {
      throw CLI::ValidationError("--regions", "lo > hi in '" + item + "'");
    }
    out.push_back(r);
  }
  return out;
}

std::pair<double, double> parse_interval(const std::string& s) {
  if (s == "all") return {-kInf, kInf};
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("--interval", "expected lo:hi or all, got '" + s + "'");
  }
  const double lo = std::stod(s.substr(0, colon));
  const double hi = std::stod(s.substr(colon + 1));
  if (!(lo <= hi)) throw CLI::ValidationError("--interval", "lo > hi");
  return {lo, hi};
}

int cmd_equilibrium(const std::string& weight, const std::string& output,
                    const std::string& csv_path, int curve_points) {
  const wrz::RadialWeight w = wrz::parse_weight_spec(weight);
  const wrz::EquilibriumResult eq = wrz::equilibrium_potential(w);

  json j = meta({{"weight", weight}});
  j["r0"] = eq.r0;
  j["R0"] = eq.R0;
  j["robin_constant"] = eq.robin_constant;
  j["limit_integral"] = wrz::limit_density_integral(w, eq);
  json bulk = json::array();
  for (const auto& [lo, hi] : eq.bulk_intervals) {
    bulk.push_back(json{{"lo", lo}, {"hi", hi}});
  }
  j["bulk"] = bulk;
  Sink sink(output);
  sink.out() << j.dump(2) << "\n";

  if (!csv_path.empty()) {
    Sink csv(csv_path);
    csv_header(csv.out(), {{"weight", weight}});
    csv.out() << "r,phi,potential,laplacian\n";
    const double hi = 1.5 * std::max(eq.R0, 1.0);
    for (int i = 1; i <= curve_points; ++i) {
      const double r = hi * i / curve_points;
      csv.out() << fmt17(r) << "," << fmt17(w.phi(r)) << ","
                << fmt17(eq.potential(r)) << "," << fmt17(w.laplacian(r)) << "\n";
    }
  }
  return 0;
}

int cmd_basis(const std::string& weight, int n, const std::string& output) {
  const wrz::BasisScale bs = wrz::basis_scale(wrz::parse_weight_spec(weight), n);
  Sink sink(output);
  csv_header(sink.out(), {{"weight", weight}, {"n", std::to_string(n)}});
  sink.out() << "j,log_c_j\n";
  for (int j = 0; j <= n; ++j) {
    sink.out() << j << "," << fmt17(bs.log_c[j]) << "\n";
  }
  return 0;
}

int cmd_kernel_check(const std::string& weight, int n, int points, double x_max,
                     const std::string& output) {
  const wrz::RadialWeight w = wrz::parse_weight_spec(weight);
  const wrz::EquilibriumResult eq = wrz::equilibrium_potential(w);
  const wrz::BasisScale bs = wrz::basis_scale(w, n);
  if (x_max <= 0.0) x_max = 1.2 * eq.R0;

  Sink sink(output);
  csv_header(sink.out(), {{"weight", weight}, {"n", std::to_string(n)}});
  sink.out() << "x,ratio,limit_value,abs_error\n";
  for (int i = 0; i <= points; ++i) {
    const double x = x_max * i / points;
    const double ratio = wrz::scaled_density_ratio(bs, x);
    // Limiting profile sqrt(laplacian/2) on the bulk, zero off it.
    double limit = 0.0;
    for (const auto& [lo, hi] : eq.bulk_intervals) {
      if (x >= lo && x <= hi) limit = std::sqrt(0.5 * w.laplacian(x));
    }
    sink.out() << fmt17(x) << "," << fmt17(ratio) << "," << fmt17(limit) << ","
               << fmt17(std::abs(ratio - limit)) << "\n";
  }
  return 0;
}

int cmd_expected(const std::string& weight, const std::string& degrees_str,
                 const std::string& interval_str, const std::string& format,
                 const std::string& output) {
  const wrz::RadialWeight w = wrz::parse_weight_spec(weight);
  const wrz::EquilibriumResult eq = wrz::equilibrium_potential(w);
  const double limit = wrz::limit_density_integral(w, eq);
  const auto [lo, hi] = parse_interval(interval_str);
  const std::vector<int> degrees = parse_degrees(degrees_str);

  struct Row {
    int n;
    double expected, scaled, rel_gap;
  };
  std::vector<Row> rows;
  for (int n : degrees) {
    const wrz::BasisScale bs = wrz::basis_scale(w, n);
    const double e = wrz::expected_real_zeros(bs, lo, hi).value;
    const double scaled = e / std::sqrt((double)n);
    rows.push_back({n, e, scaled, std::abs(scaled - limit) / limit});
  }

  const std::vector<std::pair<std::string, std::string>> config = {
      {"weight", weight}, {"n", degrees_str}, {"interval", interval_str}};
  Sink sink(output);
  if (format == "csv") {
    csv_header(sink.out(), config);
    sink.out() << "n,expected,expected_over_sqrt_n,limit,rel_gap\n";
    for (const Row& r : rows) {
      sink.out() << r.n << "," << fmt17(r.expected) << "," << fmt17(r.scaled)
                 << "," << fmt17(limit) << "," << fmt17(r.rel_gap) << "\n";
    }
  } else {
    json j = meta(config);
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back(json{{"n", r.n},
                         {"expected", r.expected},
                         {"expected_over_sqrt_n", r.scaled},
                         {"limit", limit},
                         {"rel_gap", r.rel_gap}});
    }
    j["rows"] = arr;
    sink.out() << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_simulate(const std::string& weight, int n, const std::string& dist_name,
                 int trials, std::uint64_t seed, const std::string& regions_str,
                 const std::string& format, const std::string& output) {
  const wrz::BasisScale bs = wrz::basis_scale(wrz::parse_weight_spec(weight), n);
  const wrz::CoefficientDistribution dist =
      wrz::CoefficientDistribution::parse(dist_name);
  const std::vector<wrz::RegionSpec> regions = parse_regions(regions_str);
  const wrz::TrialBatchReport rep = wrz::run_batch(bs, dist, trials, regions, seed);

  // Histogram over observed counts.
  std::map<int, int> hist;
  for (int c : rep.real_root_counts) ++hist[c];

  const std::vector<std::pair<std::string, std::string>> config = {
      {"weight", weight},     {"n", std::to_string(n)},
      {"dist", dist_name},    {"trials", std::to_string(trials)},
      {"seed", std::to_string(seed)}, {"regions", regions_str}};

  Sink sink(output);
  if (format == "csv") {
    csv_header(sink.out(), config);
    sink.out() << "trial,real_roots\n";
    for (size_t t = 0; t < rep.real_root_counts.size(); ++t) {
      sink.out() << t << "," << rep.real_root_counts[t] << "\n";
    }
    return 0;
  }
  json j = meta(config);
  j["n"] = n;
  j["dist"] = dist_name;
  j["trials"] = trials;
  j["seed"] = seed;
  j["mean_real_roots"] = rep.mean;
  j["stderr"] = rep.stderr_mean;
  json h;
  for (const auto& [count, freq] : hist) h[std::to_string(count)] = freq;
  j["counts_histogram"] = h;
  json regs = json::array();
  for (const wrz::RegionStat& r : rep.regions) {
    regs.push_back(json{{"lo", r.lo},
                        {"hi", r.hi},
                        {"mean_fraction", r.mean_fraction},
                        {"stderr", r.stderr_fraction}});
  }
  j["regions"] = regs;
  j["failures"] = rep.failed_trials;
  sink.out() << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite) {
  const auto results = wrz::run_acceptance(suite == "full");
  wrz::print_acceptance(results, std::cout);
  return wrz::all_pass(results) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted random polynomial real-zero laboratory"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "INI-style key=value config; flags override");
  app.require_subcommand(1);

  std::string weight = "weyl", output = "-", csv_path, degrees = "100",
              interval = "all", format = "json", dist = "gaussian", regions,
              suite = "full";
  int n = 100, points = 64, trials = 100, curve_points = 256;
  double x_max = 0.0;
  std::uint64_t seed = 1;

  auto* eq_cmd = app.add_subcommand("equilibrium", "equilibrium measure data");
  eq_cmd->add_option("--weight", weight);
  eq_cmd->add_option("--output", output);
  eq_cmd->add_option("--csv", csv_path, "also write a (r,phi,potential,laplacian) curve");
  eq_cmd->add_option("--curve-points", curve_points)->check(CLI::Range(2, 1000000));

  auto* basis_cmd = app.add_subcommand("basis", "basis normalization constants");
  basis_cmd->add_option("--weight", weight);
  basis_cmd->add_option("--n", n)->check(CLI::Range(1, 100000));
  basis_cmd->add_option("--output", output);

  auto* kc_cmd = app.add_subcommand("kernel-check", "scaled kernel ratio vs limit");
  kc_cmd->add_option("--weight", weight);
  kc_cmd->add_option("--n", n)->check(CLI::Range(1, 100000));
  kc_cmd->add_option("--points", points)->check(CLI::Range(1, 1000000));
  kc_cmd->add_option("--x-max", x_max);
  kc_cmd->add_option("--output", output);

  auto* exp_cmd = app.add_subcommand("expected", "expected real-zero counts");
  exp_cmd->add_option("--weight", weight);
  exp_cmd->add_option("--n", degrees, "comma-separated degree list");
  exp_cmd->add_option("--interval", interval, "lo:hi or all");
  exp_cmd->add_option("--out", format)->check(CLI::IsMember({"csv", "json"}));
  exp_cmd->add_option("--output", output);

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo real-zero counts");
  sim_cmd->add_option("--weight", weight);
  sim_cmd->add_option("--n", n)->check(CLI::Range(1, 5000));
  sim_cmd->add_option("--dist", dist)
      ->check(CLI::IsMember({"gaussian", "rademacher", "uniform"}));
  sim_cmd->add_option("--trials", trials)->check(CLI::Range(1, 10000000));
  sim_cmd->add_option("--seed", seed);
  sim_cmd->add_option("--regions", regions, "annuli lo:hi, comma separated");
  sim_cmd->add_option("--out", format)->check(CLI::IsMember({"csv", "json"}));
  sim_cmd->add_option("--output", output);

  auto* ver_cmd = app.add_subcommand("verify", "run the verification suite");
  ver_cmd->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    if (eq_cmd->parsed()) return cmd_equilibrium(weight, output, csv_path, curve_points);
    if (basis_cmd->parsed()) return cmd_basis(weight, n, output);
    if (kc_cmd->parsed()) return cmd_kernel_check(weight, n, points, x_max, output);
    if (exp_cmd->parsed()) return cmd_expected(weight, degrees, interval, format, output);
    if (sim_cmd->parsed())
      return cmd_simulate(weight, n, dist, trials, seed, regions, format, output);
    if (ver_cmd->parsed()) return cmd_verify(suite);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
