// Command-line front end. Talks to the simulator only through the C API.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bhdimer/bhdimer.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

// Any API failure in the CLI is an input problem from the user's view.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bhd_status status, const char* context) {
  if (status != BHD_OK) {
    throw InputError(std::string(context) + ": " + bhd_status_string(status) +
                     " (" + bhd_last_error() + ")");
  }
}

class Model {
 public:
  explicit Model(const bhd_params& p) {
    check(bhd_model_create(&p, &handle_), "model");
  }
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  ~Model() { bhd_model_destroy(handle_); }

  bhd_model get() const { return handle_; }

  static std::optional<Model> try_create(const bhd_params& p, bhd_status* status) {
    bhd_model h = nullptr;
    *status = bhd_model_create(&p, &h);
    if (*status != BHD_OK) return std::nullopt;
    return std::optional<Model>(std::in_place, h);
  }

  explicit Model(bhd_model adopted) : handle_(adopted) {}

 private:
  bhd_model handle_ = nullptr;
};

// 17 significant digits, '.' separator regardless of locale.
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  for (char& c : s)
    if (c == ',') c = '.';
  return s;
}

class CsvSink {
 public:
  explicit CsvSink(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InputError("cannot open output file '" + path + "'");
    }
  }

  std::ostream& out() { return path_.empty() ? std::cout : file_; }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out() << ',';
      out() << fields[i];
    }
    out() << '\n';
  }

  // Writes a gnuplot script next to the CSV file.
  void plot_script(const std::string& body) {
    if (path_.empty()) return;
    std::ofstream gp(path_ + ".gp", std::ios::binary | std::ios::trunc);
    if (!gp) throw InputError("cannot write plot script for '" + path_ + "'");
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << body;
  }

 private:
  std::string path_;
  std::ofstream file_;
};

struct Common {
  std::string config;
  std::string out;
};

struct Loaded {
  bhd_params params{};
  bhd_distribution dist{};
  bool has_dist = false;
};

Loaded load(const Common& c) {
  Loaded l;
  bhd_params_default(&l.params);
  if (!c.config.empty()) {
    int has = 0;
    check(bhd_config_load(c.config.c_str(), &l.params, &l.dist, &has), "config");
    l.has_dist = has != 0;
  }
  return l;
}

bhd_family parse_family(const std::string& s) {
  if (s == "fast") return BHD_FAMILY_FAST;
  if (s == "slow") return BHD_FAMILY_SLOW;
  if (s == "ew") return BHD_FAMILY_EW;
  throw InputError("unknown family '" + s + "'");
}

// `start,stop,count,log|lin` or an explicit comma-separated list.
std::vector<double> parse_values(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  const auto to_double = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("invalid number '" + s + "' in --values");
    }
    if (used != s.size() || !std::isfinite(v))
      throw InputError("invalid number '" + s + "' in --values");
    return v;
  };

  std::vector<double> values;
  if (parts.size() == 4 && (parts[3] == "log" || parts[3] == "lin")) {
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double count_d = to_double(parts[2]);
    const auto count = static_cast<int>(count_d);
    if (count < 1 || count != count_d) throw InputError("--values count must be a positive integer");
    if (parts[3] == "log" && !(start > 0.0 && stop > 0.0))
      throw InputError("log-spaced --values need positive bounds");
    for (int i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      values.push_back(parts[3] == "log" ? start * std::pow(stop / start, f)
                                         : start + f * (stop - start));
    }
  } else {
    for (const auto& p : parts) values.push_back(to_double(p));
  }
  if (values.empty()) throw InputError("--values is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) throw InputError("--values must be positive");
    if (i > 0 && !(values[i] > values[i - 1]))
      throw InputError("--values must be strictly increasing");
  }
  return values;
}

std::vector<double> time_grid(double t_max, int n_points) {
  if (!(t_max > 0.0)) throw InputError("--t-max must be positive");
  if (n_points < 2) throw InputError("--n-points must be >= 2");
  std::vector<double> g(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j) g[j] = t_max * j / (n_points - 1);
  return g;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  Common common;
  std::string vary;
  std::string values;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const Loaded l = load(a.common);
  std::vector<bhd_params> points;
  if (a.vary.empty()) {
    if (!a.values.empty()) throw InputError("--values requires --vary");
    points.push_back(l.params);
  } else {
    if (a.values.empty()) throw InputError("--vary requires --values");
    for (double v : parse_values(a.values)) {
      bhd_params p = l.params;
      (a.vary == "J" ? p.J : p.K) = v;
      points.push_back(p);
    }
  }

  CsvSink csv(a.common.out);
  csv.row({"J", "K", "E1", "E2", "E3", "omega21", "omega32", "omega31", "phi", "degenerate"});
  for (const bhd_params& p : points) {
    bhd_status status = BHD_OK;
    auto model = Model::try_create(p, &status);
    if (status == BHD_ERR_DEGENERATE_SPECTRUM) {
      csv.row({num(p.J), num(p.K), "", "", "", "", "", "", "", "1"});
      continue;
    }
    check(status, "model");
    bhd_spectrum s{};
    check(bhd_model_spectrum(model->get(), &s), "spectrum");
    csv.row({num(p.J), num(p.K), num(s.energies[0]), num(s.energies[1]),
             num(s.energies[2]), num(s.omega21), num(s.omega32), num(s.omega31),
             num(s.phi), "0"});
  }
  const int col = a.vary == "K" ? 2 : 1;
  std::string body = a.values.ends_with("log") ? "set logscale x\n" : "";
  body += "plot for [c=3:5] '" + a.common.out + "' using " + std::to_string(col) +
          ":c with linespoints\n";
  csv.plot_script(body);
  return kExitOk;
}

// ------------------------------------------------------------------ evolve

struct EvolveArgs {
  Common common;
  std::string family;
  std::optional<double> t_max;
  int n_points = 400;
  std::string time_unit;
};

int cmd_evolve(const EvolveArgs& a) {
  const Loaded l = load(a.common);
  Model model(l.params);

  bhd_distribution dist{};
  std::optional<double> tau;
  if (!a.family.empty()) {
    const bhd_family fam = parse_family(a.family);
    check(bhd_family_distribution(fam, &dist), "family");
    double t = 0.0;
    check(bhd_model_characteristic_time(model.get(), fam, &t), "characteristic time");
    tau = t;
  } else if (l.has_dist) {
    dist = l.dist;
  } else {
    throw InputError("evolve needs --family or r1, r2, r3 in the config file");
  }

  const bool family_run = !a.family.empty();
  const std::string unit = a.time_unit.empty() ? (family_run ? "tau" : "abs") : a.time_unit;
  if (unit == "tau" && !family_run)
    throw InputError("--time-unit tau needs --family");
  const double default_window = a.family == "ew" ? 3.0 : 2.0;
  double t_max = a.t_max.value_or(family_run ? default_window : 10.0);
  if (unit == "abs" && family_run && !a.t_max) t_max = default_window * *tau;
  if (unit == "tau") t_max *= *tau;

  if (!family_run) {
    double found_tau = 0.0;
    int found = 0;
    check(bhd_model_orthogonality_time(model.get(), &dist, t_max, 1e-9, &found_tau, &found),
          "orthogonality time");
    if (found) tau = found_tau;
  }

  const std::vector<double> times = time_grid(t_max, a.n_points);
  std::vector<bhd_sample> samples(times.size());
  check(bhd_model_evolve(model.get(), &dist, times.data(), times.size(), samples.data()),
        "evolve");

  CsvSink csv(a.common.out);
  csv.row({"t", "t_over_tau", "R0", "R1", "R2", "C", "mean_n1", "var_n1", "|survival|"});
  for (const bhd_sample& s : samples) {
    csv.row({num(s.t), tau ? num(s.t / *tau) : "", num(s.R[0]), num(s.R[1]),
             num(s.R[2]), num(s.concurrence), num(s.mean_n1), num(s.var_n1),
             num(s.survival)});
  }
  csv.plot_script("set yrange [0:1.05]\nplot '" + a.common.out + "' using " +
                  (tau ? "2" : "1") + ":6 with lines\n");
  return kExitOk;
}

// ----------------------------------------------------------------- simplex

struct SimplexArgs {
  Common common;
  int n = 100;
};

const char* region_name(bhd_region r) {
  switch (r) {
    case BHD_REGION_INSIDE: return "inside";
    case BHD_REGION_BOUNDARY: return "boundary";
    case BHD_REGION_OUTSIDE: return "outside";
  }
  return "unknown";
}

int cmd_simplex(const SimplexArgs& a) {
  std::size_t count = 0;
  check(bhd_simplex_count(a.n, &count), "simplex");
  std::vector<bhd_simplex_point> pts(count);
  check(bhd_simplex_sample(a.n, pts.data(), pts.size()), "simplex");

  CsvSink csv(a.common.out);
  csv.row({"r1", "r2", "r3", "region", "concurrence"});
  for (const auto& p : pts) {
    csv.row({num(p.r[0]), num(p.r[1]), num(p.r[2]), region_name(p.region),
             num(p.concurrence)});
  }
  csv.plot_script("set view map\nsplot '" + a.common.out +
                  "' using 1:2:5 with points palette pointtype 5\n");
  return kExitOk;
}

// ------------------------------------------------------------ family-sweep

struct SweepArgs {
  Common common;
  std::string family;
  std::string vary;
  std::string values;
  std::optional<double> fixed;
  std::optional<double> t_max;
  int n_points = 400;
};

int cmd_family_sweep(const SweepArgs& a) {
  const Loaded l = load(a.common);
  const bhd_family fam = parse_family(a.family);
  const std::vector<double> amps = parse_values(a.values);

  double fixed = 0.0;
  if (a.fixed) {
    fixed = *a.fixed;
  } else if (!a.common.config.empty()) {
    fixed = a.vary == "J" ? l.params.K : l.params.J;
  } else {
    fixed = a.vary == "J" ? 0.0 : l.params.eps1;
  }
  const double window = a.t_max.value_or(fam == BHD_FAMILY_EW ? 3.0 : 2.0);
  const std::vector<double> grid = time_grid(window, a.n_points);

  bhd_distribution dist{};
  check(bhd_family_distribution(fam, &dist), "family");

  CsvSink csv(a.common.out);
  csv.row({"amp", "t_over_tau", "C"});
  for (double amp : amps) {
    bhd_params p = l.params;
    p.J = a.vary == "J" ? amp : fixed;
    p.K = a.vary == "J" ? fixed : amp;
    Model model(p);
    double tau = 0.0;
    check(bhd_model_characteristic_time(model.get(), fam, &tau), "characteristic time");
    std::vector<double> times;
    times.reserve(grid.size());
    for (double x : grid) times.push_back(x * tau);
    std::vector<bhd_sample> samples(times.size());
    check(bhd_model_evolve(model.get(), &dist, times.data(), times.size(), samples.data()),
          "evolve");
    for (std::size_t j = 0; j < grid.size(); ++j)
      csv.row({num(amp), num(grid[j]), num(samples[j].concurrence)});
  }
  csv.plot_script("set yrange [0:1.05]\nplot '" + a.common.out +
                  "' using 2:3:1 with lines palette\n");
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(bool inject) {
  int all_passed = 0;
  const auto report = [](const char* group, int passed, const char* detail, void*) {
    std::cout << (passed ? "PASS " : "FAIL ") << group << ": " << detail << '\n';
  };
  check(bhd_verify(inject ? BHD_VERIFY_INJECT_H02_SIGN_ERROR : 0u, report, nullptr,
                   &all_passed),
        "verify");
  std::cout << (all_passed ? "all groups passed" : "verification FAILED") << '\n';
  return all_passed ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "flat key = value parameter file")
      ->check(CLI::ExistingFile);
  sub->add_option("--out", c.out, "output CSV path (stdout if omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Extended Bose-Hubbard dimer simulator.\n"
      "Units: hbar = 1, energies in units of eps1, time in units of hbar/eps1."};
  app.require_subcommand(1);

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "eigenvalues and transition frequencies");
  add_common(sp, spectrum.common);
  sp->add_option("--vary", spectrum.vary, "amplitude to sweep")->check(CLI::IsMember({"J", "K"}));
  sp->add_option("--values", spectrum.values, "start,stop,count,log|lin or a list");

  EvolveArgs evolve;
  auto* ev = app.add_subcommand("evolve", "populations, concurrence and fluctuations over time");
  add_common(ev, evolve.common);
  ev->add_option("--family", evolve.family, "initial state family")
      ->check(CLI::IsMember({"fast", "slow", "ew"}));
  ev->add_option("--t-max", evolve.t_max, "end of the time window");
  ev->add_option("--n-points", evolve.n_points, "grid points")->capture_default_str();
  ev->add_option("--time-unit", evolve.time_unit, "abs or tau (default tau for families)")
      ->check(CLI::IsMember({"abs", "tau"}));

  SimplexArgs simplex;
  auto* sx = app.add_subcommand("simplex", "concurrence over the simplex of energy distributions");
  add_common(sx, simplex.common);
  sx->add_option("--n", simplex.n, "barycentric grid resolution")->capture_default_str();

  SweepArgs sweep;
  auto* fs = app.add_subcommand("family-sweep", "concurrence series of a family across amplitudes");
  add_common(fs, sweep.common);
  fs->add_option("--family", sweep.family, "initial state family")
      ->required()
      ->check(CLI::IsMember({"fast", "slow", "ew"}));
  fs->add_option("--vary", sweep.vary, "amplitude to sweep")
      ->required()
      ->check(CLI::IsMember({"J", "K"}));
  fs->add_option("--values", sweep.values, "start,stop,count,log|lin or a list")->required();
  fs->add_option("--fixed", sweep.fixed, "value of the other amplitude");
  fs->add_option("--t-max", sweep.t_max, "window in units of tau (default 2, or 3 for ew)");
  fs->add_option("--n-points", sweep.n_points, "grid points")->capture_default_str();

  bool inject = false;
  auto* vf = app.add_subcommand("verify", "run the built-in oracle suite");
  vf->add_flag("--inject-h02-sign-error", inject, "mutation fixture for the oracle suite")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  try {
    if (sp->parsed()) return cmd_spectrum(spectrum);
    if (ev->parsed()) return cmd_evolve(evolve);
    if (sx->parsed()) return cmd_simplex(simplex);
    if (fs->parsed()) return cmd_family_sweep(sweep);
    if (vf->parsed()) return cmd_verify(inject);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
