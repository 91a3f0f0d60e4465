// noonsim: command-line experiment runner.
//
// Exit codes: 0 success, 1 usage / argument error, 2 numerical failure.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noonsim/errors.hpp"
#include "noonsim/experiment.hpp"
#include "noonsim/parallel.hpp"
#include "suite.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

const std::vector<std::string> kSubcommands{"sensitivity", "scaling", "hom",       "litho",
                                            "rosetta",     "sample",  "acceptance"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// `key = value` lines become `--key=value` arguments. Blank lines and lines
// starting with '#' are skipped.
std::vector<std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--config", path + ":" + std::to_string(lineno) +
                                                ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) != 0) key = "--" + key;
    args.push_back(key + "=" + value);
  }
  return args;
}

// Splices config-file arguments in right after the subcommand name so that
// anything given on the command line comes later and wins.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!config_path) return rest;
  const auto extra = read_config_file(*config_path);
  auto sub = rest.begin();
  while (sub != rest.end() &&
         std::find(kSubcommands.begin(), kSubcommands.end(), *sub) == kSubcommands.end()) {
    ++sub;
  }
  if (sub != rest.end()) ++sub;
  rest.insert(sub, extra.begin(), extra.end());
  return rest;
}

struct CliState {
  noonsim::ExperimentConfig config;
  std::string scheme = "noon";
  std::string phi_grid = "0.01:3.13:100";
  std::string n_range;
  std::string convention = "one-arm";
  std::string framing = "after-bs";
  std::string output;
  std::string output_dir;
};

void add_scheme_options(CLI::App* sub, CliState& st) {
  sub->add_option("--scheme", st.scheme,
                  "single-port-fock | coherent | dual-fock | noon | yurke-fermionic-analog | "
                  "yurke-bosonic (coherent: --n is the mean photon number)")
      ->capture_default_str();
  sub->add_option("--n", st.config.n, "Photon number")->capture_default_str();
  sub->add_option("--convention", st.convention, "Phase convention: one-arm | symmetric")
      ->capture_default_str();
  sub->add_flag("--invert-second-bs", st.config.invert_second_bs,
                "Use BS(-pi/2) as the second splitter");
  sub->add_option("--noon-framing", st.framing,
                  "after-bs: inject N00N after the first splitter; input: feed its preimage")
      ->capture_default_str();
  sub->add_option("--observable", st.config.observable, "auto | jz | noon-flip")
      ->capture_default_str();
  sub->add_option("--cutoff", st.config.cutoff, "Fock cutoff (default: smallest sufficient)");
  sub->add_option("--tail-tol", st.config.tail_tol, "Allowed coherent-state truncation mass")
      ->capture_default_str();
}

void add_grid_option(CLI::App* sub, CliState& st) {
  sub->add_option("--phi-grid", st.phi_grid, "Phase grid start:stop:count (radians, inclusive)")
      ->capture_default_str();
}

void add_common_options(CLI::App* sub, CliState& st) {
  sub->add_option("--output,-o", st.output, "Output file (default: stdout)");
  sub->add_option("--output-dir", st.output_dir, "Directory for <subcommand>.csv")
      ->envname("NOONSIM_OUTPUT_DIR");
  sub->add_option("--threads", st.config.threads, "Worker threads")->capture_default_str();
}

void finalize(CliState& st) {
  auto& c = st.config;
  c.scheme = noonsim::parse_scheme(st.scheme);
  c.convention = noonsim::parse_phase_convention(st.convention);
  c.framing = noonsim::parse_noon_framing(st.framing);
  c.phi_grid = noonsim::GridSpec::parse(st.phi_grid);
  if (!st.n_range.empty()) c.n_range = noonsim::RangeSpec::parse(st.n_range);
  if (c.threads < 1) throw noonsim::DomainError("--threads must be >= 1");
}

void emit(const noonsim::Table& table, const CliState& st, const std::string& name) {
  // The whole table is rendered before any file is opened.
  const std::string text = table.to_csv();
  std::filesystem::path path;
  if (!st.output.empty()) {
    path = st.output;
  } else if (!st.output_dir.empty()) {
    path = std::filesystem::path(st.output_dir) / (name + ".csv");
  } else {
    std::cout << text;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Fock-space simulator of phase-estimation interferometry"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", "key = value file; command-line flags override it");

  CliState st;
  st.config.threads = noonsim::default_threads();

  auto* sensitivity = app.add_subcommand("sensitivity", "Sweep phi and tabulate the sensitivity");
  add_scheme_options(sensitivity, st);
  add_grid_option(sensitivity, st);
  add_common_options(sensitivity, st);

  auto* scaling = app.add_subcommand("scaling", "Best sensitivity (or Fisher) versus N");
  add_scheme_options(scaling, st);
  add_grid_option(scaling, st);
  add_common_options(scaling, st);
  scaling->add_option("--n-range", st.n_range, "start:stop[:step]")->required();
  scaling->add_option("--metric", st.config.metric, "sensitivity | fisher")->capture_default_str();

  auto* hom = app.add_subcommand("hom", "Hong-Ou-Mandel output probabilities");
  add_common_options(hom, st);

  auto* litho = app.add_subcommand("litho", "Deposition curves and fringe-period ratio");
  litho->add_option("--n", st.config.n, "N00N photon number")->capture_default_str();
  litho->add_option("--points", st.config.points, "Samples per single-photon period")
      ->capture_default_str();
  litho->add_option("--lambda", st.config.lambda, "Wavelength")->capture_default_str();
  add_common_options(litho, st);

  auto* rosetta = app.add_subcommand("rosetta", "GHZ circuit versus Fock N00N expectation");
  rosetta->add_option("--n", st.config.n, "Photon / qubit number")->capture_default_str();
  rosetta->add_option("--n-range", st.n_range, "start:stop[:step] (overrides --n)");
  add_grid_option(rosetta, st);
  add_common_options(rosetta, st);

  auto* sample = app.add_subcommand("sample", "Seeded photon-counting histogram");
  add_scheme_options(sample, st);
  add_common_options(sample, st);
  sample->add_option("--phi", st.config.phi, "True phase")->capture_default_str();
  sample->add_option("--shots", st.config.shots, "Number of detections")->capture_default_str();
  sample->add_option("--seed", st.config.seed, "Generator seed")->capture_default_str();
  sample->add_option("--estimator", st.config.estimator, "none | bayes")->capture_default_str();
  sample->add_option("--grid-points", st.config.grid_points, "Bayesian grid size")
      ->capture_default_str();

  auto* acceptance = app.add_subcommand("acceptance", "Run the acceptance criteria");
  acceptance->add_option("--threads", st.config.threads, "Worker threads")->capture_default_str();

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    finalize(st);
    if (*acceptance) {
      const auto results = noonsim::acceptance::run_all(st.config.threads);
      return noonsim::acceptance::report(results, std::cout) ? 0 : kNumericalError;
    }
    if (*sensitivity) emit(noonsim::run_sensitivity(st.config), st, "sensitivity");
    if (*scaling) emit(noonsim::run_scaling(st.config), st, "scaling");
    if (*hom) emit(noonsim::run_hom(st.config), st, "hom");
    if (*litho) emit(noonsim::run_litho(st.config), st, "litho");
    if (*rosetta) emit(noonsim::run_rosetta(st.config), st, "rosetta");
    if (*sample) emit(noonsim::run_sample(st.config), st, "sample");
  } catch (const noonsim::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const noonsim::TruncationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return 0;
}
