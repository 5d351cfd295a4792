#include "simple_cortex/bench.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace simple_cortex {

Stats compute_stats(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("statistics need at least 2 samples");
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double mean = sum / static_cast<double>(samples.size());
  double squares = 0.0;
  for (double s : samples) squares += (s - mean) * (s - mean);
  return {mean, std::sqrt(squares / static_cast<double>(samples.size()))};
}

std::vector<std::string> bench_labels(std::size_t forecast_depth) {
  const auto x = "x" + std::to_string(forecast_depth);
  return {"Encode", "Encode, Learn", "Encode, Learn, " + x + " Predict, " + x + " Decode"};
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("benchmark needs at least 2 timed steps");
  BallDemo demo(config.demo, make_demo_area(config.demo));
  const double synapses = static_cast<double>(demo.area().total_synapses());

  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  std::array<std::vector<double>, 3> samples;
  for (auto& s : samples) s.reserve(steps);

  for (std::size_t i = 0; i < config.warmup_steps + steps; ++i) {
    demo.advance_environment();
    const auto t0 = clock::now();
    demo.encode();
    const auto t1 = clock::now();
    demo.learn();
    demo.feedback();
    const auto t2 = clock::now();
    demo.forecast();
    const auto t3 = clock::now();
    if (i < config.warmup_steps) continue;
    samples[0].push_back(ms(t1 - t0));
    samples[1].push_back(ms(t2 - t0));
    samples[2].push_back(ms(t3 - t0));
  }

  const auto labels = bench_labels(config.demo.forecast_depth);
  std::vector<BenchRecord> records;
  for (std::size_t v = 0; v < samples.size(); ++v) {
    const Stats stats = compute_stats(samples[v]);
    BenchRecord r;
    r.label = labels[v];
    r.samples = samples[v].size();
    r.mean_ms = stats.mean;
    r.stddev_ms = stats.stddev;
    r.synapses_per_second = stats.mean > 0.0 ? synapses / (stats.mean / 1000.0) : 0.0;
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_bench_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "label,samples,mean_ms,stddev_ms,synapses_per_sec\n";
  for (const auto& r : records) {
    out << csv_field(r.label) << ',' << r.samples << ',' << std::setprecision(9) << r.mean_ms << ',' << r.stddev_ms
        << ',' << std::setprecision(12) << r.synapses_per_second << '\n';
  }
}

void print_bench_table(std::span<const BenchRecord> records, std::uint64_t total_synapses, std::ostream& out) {
  out << "Total synapses: " << total_synapses << "  (population standard deviation)\n";
  out << std::left << std::setw(44) << "Executed Algorithms" << std::right << std::setw(12) << "Mean (ms)"
      << std::setw(16) << "Std. Dev. (ms)" << std::setw(18) << "Synapses/sec" << '\n';
  const auto flags = out.flags();
  for (const auto& r : records) {
    out << std::left << std::setw(44) << r.label << std::right << std::fixed << std::setprecision(3) << std::setw(12)
        << r.mean_ms << std::setw(16) << r.stddev_ms << std::scientific << std::setprecision(3) << std::setw(18)
        << r.synapses_per_second << '\n';
    out.flags(flags);
  }
}

}  // namespace simple_cortex
