#include "noonsim/experiment.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "noonsim/errors.hpp"
#include "noonsim/estimation.hpp"
#include "noonsim/lithography.hpp"
#include "noonsim/parallel.hpp"
#include "noonsim/rosetta.hpp"

namespace noonsim {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& context) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("malformed " + context + " '" + text + "'");
  }
  return value;
}

int required_cutoff(const SchemeTag& tag, const ExperimentConfig& config) {
  switch (tag.scheme) {
    case Scheme::coherent:
      return coherent_cutoff(tag.n, config.tail_tol);
    case Scheme::dual_fock:
      return 2 * tag.n;
    default:
      return tag.n;
  }
}

TwoModeState scheme_state(const SchemeTag& tag, int cutoff, double tail_tol) {
  switch (tag.scheme) {
    case Scheme::single_port_fock:
      return single_port_fock(tag.n, cutoff);
    case Scheme::coherent:
      return coherent_vacuum(std::sqrt(static_cast<double>(tag.n)), cutoff, tail_tol);
    case Scheme::dual_fock:
      return dual_fock(tag.n, cutoff);
    case Scheme::noon:
      return noon(tag.n, 0.0, cutoff);
    case Scheme::yurke_fermionic_analog:
      return yurke_fermionic_analog(tag.n, cutoff);
    case Scheme::yurke_bosonic:
      return yurke_bosonic(tag.n, cutoff);
  }
  throw DomainError("unknown scheme");
}

BlockObservable named_observable(const std::string& name, int n, int max_n) {
  if (name == "jz") return j_operator(JAxis::z, max_n);
  if (name == "noon-flip") return observable_noon_flip(n, max_n);
  throw DomainError("unknown observable '" + name + "'");
}

std::vector<int> scaling_values(const ExperimentConfig& config) {
  if (!config.n_range) throw DomainError("scaling needs --n-range");
  auto values = config.n_range->values();
  if (values.size() < 3) throw DomainError("scaling needs at least 3 photon numbers");
  return values;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw DomainError("grid spec must be start:stop:count, got '" + text + "'");
  GridSpec spec{parse_number<double>(parts[0], "grid start"),
                parse_number<double>(parts[1], "grid stop"),
                parse_number<int>(parts[2], "grid count")};
  spec.validate();
  return spec;
}

void GridSpec::validate() const {
  if (count < 2) throw DomainError("grid count must be >= 2");
  if (!(start < stop)) throw DomainError("grid start must be below stop");
}

std::vector<double> GridSpec::values() const {
  validate();
  return linspace(start, stop, count);
}

RangeSpec RangeSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) {
    throw DomainError("range must be start:stop or start:stop:step, got '" + text + "'");
  }
  RangeSpec r{parse_number<int>(parts[0], "range start"), parse_number<int>(parts[1], "range stop"),
              parts.size() == 3 ? parse_number<int>(parts[2], "range step") : 1};
  if (r.step < 1) throw DomainError("range step must be >= 1");
  if (r.start > r.stop) throw DomainError("range start exceeds stop");
  return r;
}

std::vector<int> RangeSpec::values() const {
  std::vector<int> out;
  for (int v = start; v <= stop; v += step) out.push_back(v);
  return out;
}

NoonFraming parse_noon_framing(const std::string& name) {
  if (name == "after-bs") return NoonFraming::after_first_bs;
  if (name == "input") return NoonFraming::input_port;
  throw DomainError("unknown N00N framing '" + name + "'");
}

SchemeSetup make_scheme_setup(const SchemeTag& tag, const ExperimentConfig& config) {
  const int needed = required_cutoff(tag, config);
  const int cutoff = config.cutoff >= 0 ? config.cutoff : needed;
  auto input = scheme_state(tag, cutoff, config.tail_tol);
  const int max_n = cutoff;

  if (tag.scheme == Scheme::noon) {
    const std::string name = config.observable == "auto" ? "noon-flip" : config.observable;
    const auto diagnostic = flip_diagnostic(tag.n, max_n);
    std::vector<Stage> stages;
    if (config.framing == NoonFraming::input_port) {
      const auto front = beam_splitter(std::numbers::pi / 2, max_n);
      input = apply(front.adjoint(), input);
      stages.emplace_back(BeamSplitterStage{std::numbers::pi / 2});
    }
    stages.emplace_back(PhaseStage{config.convention});
    stages.emplace_back(FixedStage{diagnostic, "flip-diagnostic"});
    return SchemeSetup{tag,
                       std::move(input),
                       InterferometerPipeline(std::move(stages), max_n),
                       conjugate(named_observable(name, tag.n, max_n), diagnostic),
                       name,
                       2 * std::numbers::pi / tag.n};
  }

  const std::string name = config.observable == "auto" ? "jz" : config.observable;
  return SchemeSetup{tag,
                     std::move(input),
                     InterferometerPipeline::mach_zehnder(config.convention,
                                                          config.invert_second_bs, max_n),
                     named_observable(name, tag.n, max_n),
                     name,
                     2 * std::numbers::pi};
}

Table run_sensitivity(const ExperimentConfig& config) {
  const auto grid = config.phi_grid.values();
  const auto setup = make_scheme_setup(SchemeTag(config.scheme, config.n), config);
  const auto curve =
      sensitivity_curve(setup.pipeline, setup.input, setup.observable, grid, config.threads);
  Table table{{"scheme", "n", "phi", "expectation", "variance", "sensitivity"}, {}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    table.rows.push_back({to_string(config.scheme), static_cast<long>(config.n), curve.phi[i],
                          curve.expectation[i], curve.variance[i], curve.delta_phi[i]});
  }
  return table;
}

Table run_scaling(const ExperimentConfig& config) {
  const auto ns = scaling_values(config);
  const auto grid = config.phi_grid.values();
  const bool fisher = config.metric == "fisher";
  if (!fisher && config.metric != "sensitivity") {
    throw DomainError("unknown scaling metric '" + config.metric + "'");
  }

  std::vector<double> best_phi(ns.size());
  std::vector<double> best_value(ns.size());
  parallel_for(ns.size(), config.threads, [&](std::size_t i) {
    const auto setup = make_scheme_setup(SchemeTag(config.scheme, ns[i]), config);
    if (fisher) {
      best_value[i] = -1.0;
      for (double phi : grid) {
        const double f = classical_fisher(setup.pipeline, setup.input, phi, 1e-5);
        if (f > best_value[i]) {
          best_value[i] = f;
          best_phi[i] = phi;
        }
      }
    } else {
      const auto best = min_sensitivity(
          sensitivity_curve(setup.pipeline, setup.input, setup.observable, grid, 1));
      best_phi[i] = best.phi;
      best_value[i] = best.delta_phi;
    }
  });

  Table table{{"n", "phi_star", fisher ? "fisher" : "min_sensitivity"}, {}, {}};
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    table.rows.push_back({static_cast<long>(ns[i]), best_phi[i], best_value[i]});
    points.emplace_back(ns[i], best_value[i]);
  }
  const auto fit = scaling_fit(points);
  table.footer = {{"slope", fit.slope}, {"intercept", fit.intercept}};
  return table;
}

Table run_hom(const ExperimentConfig&) {
  const auto out = apply(beam_splitter(std::numbers::pi / 2, 2), dual_fock(1, 2));
  Table table{{"n_a", "n_b", "probability"}, {}, {}};
  for (int k = 0; k <= 2; ++k) {
    table.rows.push_back({static_cast<long>(2 - k), static_cast<long>(k),
                          std::norm(out.amplitude(2 - k, k))});
  }
  return table;
}

Table run_litho(const ExperimentConfig& config) {
  if (config.n < 1) throw DomainError("lithography needs N >= 1");
  if (config.points < 2) throw DomainError("lithography needs --points >= 2");
  if (!(config.lambda > 0)) throw DomainError("wavelength must be positive");
  // Three single-photon periods centred so that every peak is interior.
  const double period = 2 * config.lambda;
  const auto x = linspace(-config.lambda, -config.lambda + 3 * period, 3 * config.points + 1);
  const auto single = deposition_rate(DepositionKind::single, 1, x, config.lambda);
  const auto two = deposition_rate(DepositionKind::classical_two_photon, 2, x, config.lambda);
  const auto entangled = deposition_rate(DepositionKind::noon, config.n, x, config.lambda);

  Table table{{"x", "single", "classical_two_photon", "noon_" + std::to_string(config.n)}, {}, {}};
  for (std::size_t i = 0; i < x.size(); ++i) {
    table.rows.push_back({x[i], single.rate[i], two.rate[i], entangled.rate[i]});
  }
  const double p_single = fringe_period(single);
  const double p_noon = fringe_period(entangled);
  table.footer = {{"period_single", p_single},
                  {"period_noon", p_noon},
                  {"period_ratio", p_single / p_noon}};
  return table;
}

Table run_rosetta(const ExperimentConfig& config) {
  const auto ns = config.n_range ? config.n_range->values() : std::vector<int>{config.n};
  const auto grid = config.phi_grid.values();
  Table table{{"n", "phi", "qubit_value", "fock_value", "discrepancy"}, {}, {}};
  double worst = 0.0;
  for (int n : ns) {
    if (n < 1 || n > kMaxQubits) throw DomainError("rosetta needs 1 <= N <= 14");
    const auto ghz = ghz_prepare(n);
    const auto flip = observable_noon_flip(n);
    for (double phi : grid) {
      const double qubit = expect_tensor_A(collective_phase(ghz, phi));
      const double fock = expectation(flip, noon(n, phi, n));
      const double gap = std::abs(qubit - fock);
      worst = std::max(worst, gap);
      table.rows.push_back({static_cast<long>(n), phi, qubit, fock, gap});
    }
  }
  table.footer = {{"max_discrepancy", worst}};
  return table;
}

Table run_sample(const ExperimentConfig& config) {
  if (config.shots < 0) throw DomainError("shots must be non-negative");
  const bool bayes = config.estimator == "bayes";
  if (!bayes && config.estimator != "none") {
    throw DomainError("unknown estimator '" + config.estimator + "'");
  }
  const auto setup = make_scheme_setup(SchemeTag(config.scheme, config.n), config);
  const auto hist =
      sample_outcomes(setup.pipeline, setup.input, config.phi, config.shots, config.seed);

  Table table{{"n_a", "n_b", "count"}, {}, {}};
  for (const auto& [outcome, count] : hist.counts) {
    table.rows.push_back({static_cast<long>(outcome.n_a), static_cast<long>(outcome.n_b), count});
  }
  table.footer = {{"phi_true", config.phi}, {"shots", config.shots},
                  {"seed", std::to_string(config.seed)}};
  if (bayes) {
    if (config.grid_points < 2) throw DomainError("Bayesian grid needs >= 2 points");
    const double period = setup.likelihood_period;
    // One full period, right endpoint excluded.
    auto grid = linspace(0.0, period, config.grid_points + 1);
    grid.pop_back();
    const auto post = bayes_posterior(hist, setup.pipeline, setup.input, grid, config.threads);
    table.footer.emplace_back("posterior_mean", posterior_mean(post, period));
    table.footer.emplace_back("posterior_std", posterior_std(post, period));
  }
  return table;
}

}  // namespace noonsim
