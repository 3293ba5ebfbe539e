#include "evoc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace evoc {

void SweepSpec::validate() const {
  if (creator_fractions.empty()) {
    throw std::invalid_argument("creator_fractions must not be empty");
  }
  if (invent_rates.empty()) {
    throw std::invalid_argument("invent_rates must not be empty");
  }
  for (double f : creator_fractions) {
    if (!(f >= 0.0 && f <= 1.0)) {
      throw std::invalid_argument("creator_fractions must lie in [0, 1]");
    }
  }
  for (double p : invent_rates) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument("invent_rates must lie in (0, 1]");
    }
  }
  if (runs_per_cell <= 0) {
    throw std::invalid_argument("runs_per_cell must be positive");
  }
  if (measure_at_iteration <= 0) {
    throw std::invalid_argument("measure_at_iteration must be positive");
  }
  base.validate();
}

std::uint64_t run_seed(std::uint64_t master_seed, double creator_fraction,
                       double invent_rate, int run) {
  std::uint64_t h = mix64(master_seed);
  h = hash_combine(h, creator_fraction);
  h = hash_combine(h, invent_rate);
  return hash_combine(h, static_cast<std::uint64_t>(run));
}

RunConfig sweep_run_config(const SweepSpec& spec, double creator_fraction,
                           double invent_rate, int run) {
  RunConfig config = spec.base;
  config.world.creator_fraction = creator_fraction;
  config.world.creator_invent_rate = invent_rate;
  config.iterations = spec.measure_at_iteration;
  config.seed = run_seed(spec.master_seed, creator_fraction, invent_rate, run);
  return config;
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return s;
}

std::vector<SweepCell> sweep(const SweepSpec& spec, int threads) {
  spec.validate();

  std::vector<double> rates = spec.invent_rates;
  std::vector<double> fractions = spec.creator_fractions;
  std::sort(rates.begin(), rates.end());
  std::sort(fractions.begin(), fractions.end());

  struct Job {
    double fraction;
    double rate;
    int run;
  };
  std::vector<Job> jobs;
  for (double rate : rates) {
    for (double fraction : fractions) {
      for (int r = 0; r < spec.runs_per_cell; ++r) {
        jobs.push_back({fraction, rate, r});
      }
    }
  }

  // Each run writes only its own slot; aggregation happens afterwards in
  // job order, so the thread count cannot change the result.
  std::vector<double> fitness(jobs.size());
  std::vector<double> diversity_at(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const auto& job = jobs[i];
      const auto series =
          run(sweep_run_config(spec, job.fraction, job.rate, job.run));
      fitness[i] = series.back().mean_fitness;
      diversity_at[i] = series.back().diversity;
    }
  };
  const int n_threads = std::max(1, threads);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<SweepCell> table;
  const auto per_cell = static_cast<std::size_t>(spec.runs_per_cell);
  for (std::size_t begin = 0; begin < jobs.size(); begin += per_cell) {
    const auto f = summarize(std::span(fitness).subspan(begin, per_cell));
    const auto d = summarize(std::span(diversity_at).subspan(begin, per_cell));
    table.push_back({jobs[begin].fraction, jobs[begin].rate, f.mean,
                     f.stderr_, d.mean, d.stderr_, spec.runs_per_cell});
  }
  return table;
}

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("spearman: series differ in length");
  }
  if (x.size() < 3) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

double field_value(const SweepCell& cell, SweepField field) {
  switch (field) {
    case SweepField::CreatorFraction:
      return cell.creator_fraction;
    case SweepField::InventRate:
      return cell.invent_rate;
    case SweepField::MeanFitness:
      return cell.mean_fitness_avg;
    case SweepField::MeanFitnessStderr:
      return cell.mean_fitness_stderr;
    case SweepField::Diversity:
      return cell.diversity_avg;
    case SweepField::DiversityStderr:
      return cell.diversity_stderr;
  }
  return 0.0;
}

std::vector<SweepCell> curve(std::span<const SweepCell> table,
                             double invent_rate) {
  std::vector<SweepCell> out;
  for (const auto& c : table) {
    if (c.invent_rate == invent_rate) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.creator_fraction < b.creator_fraction;
  });
  return out;
}

std::map<double, std::optional<double>> correlate(
    std::span<const SweepCell> table, SweepField x, SweepField y) {
  std::map<double, std::vector<const SweepCell*>> groups;
  for (const auto& c : table) groups[c.invent_rate].push_back(&c);
  std::map<double, std::optional<double>> out;
  for (const auto& [rate, rows] : groups) {
    if (rows.size() < 3) {
      throw std::invalid_argument(
          "correlate needs at least three rows per invent_rate");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto* c : rows) {
      xs.push_back(field_value(*c, x));
      ys.push_back(field_value(*c, y));
    }
    out[rate] = spearman(xs, ys);
  }
  return out;
}

}  // namespace evoc
