// Copyright 2026 The puretomo Authors
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

#include "puretomo/experiments.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "puretomo/mub.hpp"

namespace puretomo {

namespace {

// RFC-4180 row terminator.
constexpr const char* kEol = "\r\n";

void run_indexed(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& body) {
  std::size_t workers = threads != 0
                            ? threads
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      try {
        for (std::size_t i = next.fetch_add(1); i < count && !failed;
             i = next.fetch_add(1))
          body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

double pairwise_sum(const std::vector<double>& values, std::size_t lo,
                    std::size_t hi) {
  const std::size_t n = hi - lo;
  if (n == 0) return 0.0;
  if (n == 1) return values[lo];
  const std::size_t mid = lo + n / 2;
  return pairwise_sum(values, lo, mid) + pairwise_sum(values, mid, hi);
}

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
};

// Order-independent mean (pairwise summation) and sample standard deviation.
MeanStd summarize(const std::vector<double>& values) {
  MeanStd out;
  const std::size_t n = values.size();
  if (n == 0) return out;
  out.mean = pairwise_sum(values, 0, n) / static_cast<double>(n);
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = values[i] - out.mean;
      sq[i] = delta * delta;
    }
    out.stddev =
        std::sqrt(pairwise_sum(sq, 0, n) / static_cast<double>(n - 1));
  }
  return out;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_dims(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void write_common_header(std::ostream& os, const ExperimentConfig& config,
                         const char* study) {
  os << "# puretomo " << study << kEol;
  os << "# seed=" << config.seed << " trials=" << config.trials
     << " mu=" << format_double(config.mu) << " pulses=" << config.pulses
     << " exact=" << (config.exact_mode ? 1 : 0) << kEol;
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

std::vector<double> ExperimentConfig::default_lambda_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(static_cast<double>(i) / 10.0);
  return grid;
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::vector<FidVsDimCell> run_fidelity_vs_dimension(
    const ExperimentConfig& config, std::ostream& csv) {
  require(!config.exact_mode,
          "fid-vs-dim is a noise study; exact mode is not meaningful");
  require(!config.dims.empty(), "fid-vs-dim needs at least one dimension");
  require(!config.dark_rates.empty(), "fid-vs-dim needs dark rates");
  require(config.trials >= 1, "trial count must be >= 1");
  require(config.mu > 0.0, "count inversion needs mu > 0");
  for (std::size_t d : config.dims) require(d >= 1, "dimensions must be >= 1");
  for (double dark : config.dark_rates)
    require(dark >= 0.0, "dark rates must be >= 0");

  write_common_header(csv, config, "fid-vs-dim");
  csv << "# dims=" << join_dims(config.dims) << kEol;
  csv << "# dark=" << join_doubles(config.dark_rates) << kEol;
  csv << "dim,dark_rate,trial,seed,fidelity" << kEol;

  const std::size_t cells = config.dims.size() * config.dark_rates.size();
  std::vector<double> fidelities(cells * config.trials);
  run_indexed(cells * config.trials, config.threads, [&](std::size_t item) {
    const std::size_t cell = item / config.trials;
    const std::size_t trial = item % config.trials;
    const std::size_t dim = config.dims[cell / config.dark_rates.size()];
    const double dark = config.dark_rates[cell % config.dark_rates.size()];
    RandomStream rng(config.seed, trial);
    const PureState psi = haar_random_state(dim, rng);
    const AdaptiveRun run =
        run_adaptive_tomography(psi, config.noise_model(dark), rng);
    fidelities[item] = fidelity(psi, run.reconstruction.estimate);
  });

  std::vector<FidVsDimCell> summaries;
  summaries.reserve(cells);
  std::size_t item = 0;
  for (std::size_t di = 0; di < config.dims.size(); ++di) {
    for (std::size_t ki = 0; ki < config.dark_rates.size(); ++ki) {
      for (std::size_t trial = 0; trial < config.trials; ++trial, ++item) {
        csv << config.dims[di] << ',' << format_double(config.dark_rates[ki])
            << ',' << trial << ',' << config.seed << ','
            << format_double(fidelities[item]) << kEol;
      }
      const std::size_t cell = di * config.dark_rates.size() + ki;
      const std::vector<double> cell_values(
          fidelities.begin() + cell * config.trials,
          fidelities.begin() + (cell + 1) * config.trials);
      const MeanStd stats = summarize(cell_values);
      summaries.push_back({config.dims[di], config.dark_rates[ki],
                           config.trials, stats.mean, stats.stddev});
      csv << "# summary dim=" << config.dims[di]
          << " dark_rate=" << format_double(config.dark_rates[ki])
          << " n=" << config.trials
          << " mean_fidelity=" << format_double(stats.mean)
          << " stddev_fidelity=" << format_double(stats.stddev) << kEol;
    }
  }
  return summaries;
}

std::vector<VisVsPurityCell> run_visibility_vs_purity(
    const ExperimentConfig& config, std::ostream& csv) {
  require(config.dims.size() == 1, "vis-vs-purity runs at a single dimension");
  require(!config.lambda_grid.empty(), "vis-vs-purity needs a lambda grid");
  require(config.trials >= 1, "trial count must be >= 1");
  const std::size_t dim = config.dims.front();
  require(dim >= 1, "dimensions must be >= 1");
  for (double lambda : config.lambda_grid)
    require(lambda >= 0.0 && lambda <= 1.0,
            "lambda grid values must lie in [0, 1]");
  require(config.dark_rates.size() <= 1,
          "vis-vs-purity uses a single dark rate");
  const double dark =
      config.dark_rates.empty() ? 0.0 : config.dark_rates.front();
  require(dark >= 0.0, "dark rates must be >= 0");
  if (!config.exact_mode)
    require(config.mu > 0.0, "count inversion needs mu > 0");

  write_common_header(csv, config, "vis-vs-purity");
  csv << "# dim=" << dim << kEol;
  if (!config.exact_mode) csv << "# dark=" << format_double(dark) << kEol;
  csv << "# lambda-grid=" << join_doubles(config.lambda_grid) << kEol;
  csv << "lambda,purity,trial,seed,max_residual" << kEol;

  const std::size_t cells = config.lambda_grid.size();
  std::vector<double> residuals(cells * config.trials);
  run_indexed(cells * config.trials, config.threads, [&](std::size_t item) {
    const double lambda = config.lambda_grid[item / config.trials];
    const std::size_t trial = item % config.trials;
    RandomStream rng(config.seed, trial);
    const PureState psi = haar_random_state(dim, rng);
    const DensityMatrix rho = white_noise_state(psi, lambda);
    const AdaptiveRun run =
        config.exact_mode
            ? run_adaptive_tomography(rho)
            : run_adaptive_tomography(rho, config.noise_model(dark), rng);
    residuals[item] = run.certificate.max_residual;
  });

  std::vector<VisVsPurityCell> summaries;
  summaries.reserve(cells);
  std::size_t item = 0;
  for (std::size_t li = 0; li < cells; ++li) {
    const double lambda = config.lambda_grid[li];
    const double pur = white_noise_purity(dim, lambda);
    for (std::size_t trial = 0; trial < config.trials; ++trial, ++item) {
      csv << format_double(lambda) << ',' << format_double(pur) << ','
          << trial << ',' << config.seed << ','
          << format_double(residuals[item]) << kEol;
    }
    const std::vector<double> cell_values(
        residuals.begin() + li * config.trials,
        residuals.begin() + (li + 1) * config.trials);
    const MeanStd stats = summarize(cell_values);
    summaries.push_back(
        {lambda, pur, config.trials, stats.mean, stats.stddev});
    csv << "# summary lambda=" << format_double(lambda)
        << " purity=" << format_double(pur) << " n=" << config.trials
        << " mean_max_residual=" << format_double(stats.mean)
        << " stddev_max_residual=" << format_double(stats.stddev) << kEol;
  }
  return summaries;
}

CompareSummary run_method_comparison(const ExperimentConfig& config,
                                     std::ostream& csv) {
  require(config.dims.size() == 1, "compare runs at a single dimension");
  require(config.trials >= 1, "trial count must be >= 1");
  const std::size_t dim = config.dims.front();
  if (!config.exact_mode)
    require(config.mu > 0.0, "count inversion needs mu > 0");
  const MubFamily family = build_mubs(dim);  // rejects non-prime dimensions
  require(config.dark_rates.size() <= 1,
          "compare uses a single dark rate");
  const double dark =
      config.dark_rates.empty() ? 0.0 : config.dark_rates.front();
  require(dark >= 0.0, "dark rates must be >= 0");

  write_common_header(csv, config, "compare");
  csv << "# dim=" << dim << kEol;
  csv << "# dark=" << format_double(dark) << kEol;
  csv << "dim,trial,seed,fidelity_adaptive,fidelity_mub,outcomes_adaptive,"
         "outcomes_mub"
      << kEol;

  const std::size_t outcomes_adaptive = 4 * dim - 3;
  const std::size_t outcomes_mub = dim * (dim + 1);
  std::vector<double> fid_adaptive(config.trials);
  std::vector<double> fid_mub(config.trials);
  run_indexed(config.trials, config.threads, [&](std::size_t trial) {
    RandomStream rng(config.seed, trial);
    const PureState psi = haar_random_state(dim, rng);
    const NoiseModel model = config.noise_model(dark);
    const AdaptiveRun adaptive =
        config.exact_mode ? run_adaptive_tomography(psi)
                          : run_adaptive_tomography(psi, model, rng);
    const MubRun mub = config.exact_mode
                           ? run_mub_tomography(psi, family)
                           : run_mub_tomography(psi, family, model, rng);
    if (adaptive.outcomes.size() != outcomes_adaptive ||
        mub.outcomes.size() != outcomes_mub)
      throw std::logic_error("outcome bookkeeping mismatch");
    fid_adaptive[trial] = fidelity(psi, adaptive.reconstruction.estimate);
    fid_mub[trial] = fidelity(psi, mub.estimate);
  });

  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    csv << dim << ',' << trial << ',' << config.seed << ','
        << format_double(fid_adaptive[trial]) << ','
        << format_double(fid_mub[trial]) << ',' << outcomes_adaptive << ','
        << outcomes_mub << kEol;
  }
  const MeanStd a = summarize(fid_adaptive);
  const MeanStd m = summarize(fid_mub);
  csv << "# summary dim=" << dim << " n=" << config.trials
      << " mean_fidelity_adaptive=" << format_double(a.mean)
      << " stddev_fidelity_adaptive=" << format_double(a.stddev)
      << " mean_fidelity_mub=" << format_double(m.mean)
      << " stddev_fidelity_mub=" << format_double(m.stddev) << kEol;
  return {dim,    config.trials,   a.mean,       a.stddev,
          m.mean, m.stddev,        outcomes_adaptive, outcomes_mub};
}

namespace {

cplx parse_amplitude(const std::string& raw) {
  std::string token;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) token += c;
  if (token.empty()) throw std::invalid_argument("empty amplitude token");

  const bool imaginary_tail = token.back() == 'i' || token.back() == 'I';
  if (!imaginary_tail) return {std::stod(token), 0.0};

  token.pop_back();
  // Split at the last +/- that starts the imaginary term (skip exponents
  // and a leading sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = token.size(); i-- > 1;) {
    if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' &&
        token[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto parse_signed = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return std::stod(s);
  };
  if (split == std::string::npos) return {0.0, parse_signed(token)};
  return {std::stod(token.substr(0, split)),
          parse_signed(token.substr(split))};
}

}  // namespace

PureState parse_state_spec(const std::string& spec, std::size_t dim,
                           RandomStream& rng) {
  if (spec == "uniform") return PureState::uniform(dim);
  if (spec == "random") return haar_random_state(dim, rng);
  if (spec.rfind("basis-", 0) == 0) {
    const std::size_t index = std::stoul(spec.substr(6));
    return PureState::basis(dim, index);
  }

  std::vector<cplx> amps;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string token =
        spec.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    amps.push_back(parse_amplitude(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (amps.size() != dim)
    throw std::invalid_argument(
        "amplitude list length disagrees with the dimension");
  return PureState::normalized(std::move(amps));
}

SingleShotResult run_single_shot(const ExperimentConfig& config,
                                 const std::string& state_spec,
                                 std::ostream& report, std::ostream* csv) {
  require(config.dims.size() == 1, "single runs at a single dimension");
  const std::size_t dim = config.dims.front();
  if (!config.exact_mode)
    require(config.mu > 0.0, "count inversion needs mu > 0");
  require(config.dark_rates.size() <= 1, "single uses a single dark rate");
  const double dark =
      config.dark_rates.empty() ? 0.0 : config.dark_rates.front();
  require(dark >= 0.0, "dark rates must be >= 0");

  RandomStream rng(config.seed, 0);
  const PureState psi = parse_state_spec(state_spec, dim, rng);

  SingleShotResult result{
      config.exact_mode
          ? run_adaptive_tomography(psi)
          : run_adaptive_tomography(psi, config.noise_model(dark), rng),
      0.0};
  result.fidelity = fidelity(psi, result.run.reconstruction.estimate);

  const ReconstructionResult& rec = result.run.reconstruction;
  report << "single-shot tomography, dim=" << dim << ", state=" << state_spec
         << ", " << (config.exact_mode ? "exact probabilities" : "noisy counts")
         << "\n";
  if (!config.exact_mode)
    report << "noise: mu=" << format_double(config.mu)
           << " dark=" << format_double(dark) << " pulses=" << config.pulses
           << " seed=" << config.seed << "\n";
  report << "reference index: " << rec.reference << "\n";
  report << "outcomes (" << result.run.outcomes.size() << "):\n";
  for (const OutcomeRecord& rec_out : result.run.outcomes) {
    if (rec_out.setting.kind == SettingKind::kCanonical)
      report << "  canonical k=" << rec_out.setting.index;
    else
      report << "  phase k=" << rec_out.setting.index
             << " step=" << rec_out.setting.step;
    if (!config.exact_mode) report << " counts=" << rec_out.counts;
    report << " p=" << format_double(rec_out.probability);
    if (rec_out.saturated) report << " (saturated)";
    report << "\n";
  }
  report << "reconstructed amplitudes:\n";
  for (std::size_t k = 0; k < dim; ++k) {
    const cplx c = rec.estimate.amplitude(k);
    report << "  c[" << k << "] = " << format_double(c.real()) << " "
           << (c.imag() < 0 ? "-" : "+") << " "
           << format_double(std::abs(c.imag())) << "i\n";
  }
  report << "fidelity vs input: " << format_double(result.fidelity) << "\n";
  report << "purity certificate: max residual "
         << format_double(result.run.certificate.max_residual)
         << " vs threshold "
         << format_double(result.run.certificate.threshold) << " -> "
         << (result.run.certificate.pass ? "pass" : "fail") << "\n";

  if (csv != nullptr) {
    write_common_header(*csv, config, "single");
    *csv << "# dim=" << dim << kEol;
    *csv << "setting,index,step,counts,probability" << kEol;
    for (const OutcomeRecord& rec_out : result.run.outcomes) {
      *csv << (rec_out.setting.kind == SettingKind::kCanonical ? "canonical"
                                                               : "phase")
           << ',' << rec_out.setting.index << ',' << rec_out.setting.step
           << ',' << rec_out.counts << ','
           << format_double(rec_out.probability) << kEol;
    }
  }
  return result;
}

}  // namespace puretomo
