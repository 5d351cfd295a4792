// simple-cortex: ball demo, benchmark and checkpoint inspection.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <string>

#include "simple_cortex/bench.hpp"
#include "simple_cortex/demo.hpp"
#include "simple_cortex/persistence.hpp"

namespace sc = simple_cortex;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

void add_sizing_flags(CLI::App& cmd, sc::DemoConfig& config) {
  cmd.add_option("--neurons", config.neurons, "Neuron count")->capture_default_str();
  cmd.add_option("--synapses", config.forest0_synapses, "Scene-forest synapses per dendrite")->capture_default_str();
  cmd.add_option("--threshold-percent", config.threshold_percent, "Scene dendrite threshold, % of its synapses")
      ->capture_default_str();
  cmd.add_option("--forecast", config.forecast_depth, "Predict/decode iterations per step")->capture_default_str();
  cmd.add_option("--seed", config.seed, "Environment seed")->capture_default_str();
  cmd.add_option("--width", config.width, "Scene width in pixels")->capture_default_str();
  cmd.add_option("--height", config.height, "Scene height in pixels")->capture_default_str();
  cmd.add_option("--neuron-threshold", config.neuron_threshold, "Active dendrites needed to activate a neuron")
      ->capture_default_str();
  cmd.add_option("--predict-threshold", config.predict_threshold, "Active dendrites needed to predict a neuron")
      ->capture_default_str();
  cmd.add_option("--respawn-every", config.respawn_interval, "Respawn the ball every N steps (0 = never)")
      ->capture_default_str();
}

int cmd_demo(const sc::DemoConfig& config) {
  try {
    sc::validate(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  sc::run_demo(config, &std::cout);
  std::cout << "wrote " << config.steps << " steps";
  if (!config.output_directory.empty()) std::cout << " of images to " << config.output_directory.string();
  std::cout << '\n';
  return 0;
}

int cmd_bench(const sc::BenchConfig& config, std::size_t steps, const std::string& csv_path) {
  try {
    sc::validate(config.demo);
    if (steps < 2) throw std::invalid_argument("--steps must be at least 2");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto records = sc::run_bench(config, steps);
  const auto specs = sc::demo_forest_specs(config.demo);
  sc::print_bench_table(records, sc::Area::total_synapses(config.demo.neurons, specs), std::cout);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path + " for writing");
    sc::write_bench_csv(records, csv);
    std::cout << "csv written to " << csv_path << '\n';
  }
  return 0;
}

int cmd_inspect(const std::string& path) {
  const sc::Area area = sc::load_area_file(path);
  std::cout << "checkpoint: " << path << '\n'
            << "format version: " << sc::kAreaFormatVersion << '\n'
            << "neurons: " << area.num_neurons() << '\n'
            << "forests: " << area.forest_count() << '\n'
            << "neuron threshold: " << area.neuron_threshold() << '\n'
            << "predict threshold: " << area.predict_threshold() << '\n';

  std::uint64_t connected_total = 0;
  for (std::size_t i = 0; i < area.forest_count(); ++i) {
    const auto& f = area.forest(i);
    const auto perms = f.permanences();
    const auto connected = static_cast<std::uint64_t>(
        std::count_if(perms.begin(), perms.end(), [](std::uint8_t p) { return p > 0; }));
    connected_total += connected;
    std::cout << "forest " << i << ": " << f.synapses_per_dendrite() << " synapses/dendrite, " << f.stimuli_size()
              << " stimuli, threshold " << f.dendrite_threshold() << ", " << f.synapse_count() << " synapses, "
              << connected << " connected (" << std::fixed << std::setprecision(6)
              << static_cast<double>(connected) / static_cast<double>(f.synapse_count()) << ")\n";
    std::cout.unsetf(std::ios::floatfield);
  }
  std::cout << "total synapses: " << area.total_synapses() << '\n'
            << "connected fraction: " << std::fixed << std::setprecision(6)
            << static_cast<double>(connected_total) / static_cast<double>(area.total_synapses()) << '\n';
  std::cout.unsetf(std::ios::floatfield);

  const auto boosts = area.boosts();
  const auto [lo, hi] = std::minmax_element(boosts.begin(), boosts.end());
  double sum = 0.0;
  for (auto b : boosts) sum += b;
  std::cout << "boosts: min " << *lo << ", max " << *hi << ", mean " << std::setprecision(3) << std::fixed
            << sum / static_cast<double>(boosts.size()) << ", cap " << area.boost_cap() << '\n';
  std::cout.unsetf(std::ios::floatfield);

  constexpr std::array<std::uint32_t, 5> edges{0, 1, 10, 100, 1000};
  std::array<std::size_t, edges.size()> buckets{};
  std::size_t at_cap = 0;
  for (auto b : boosts) {
    std::size_t k = edges.size() - 1;
    while (b < edges[k]) --k;
    ++buckets[k];
    if (b == area.boost_cap()) ++at_cap;
  }
  std::cout << "boost histogram: 0: " << buckets[0] << ", 1-9: " << buckets[1] << ", 10-99: " << buckets[2]
            << ", 100-999: " << buckets[3] << ", >=1000: " << buckets[4] << ", at cap: " << at_cap << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple Cortex: online sequence learning on a bouncing-ball scene"};
  app.require_subcommand(1);

  sc::DemoConfig demo_config;
  demo_config.respawn_interval = 200;
  std::string out_dir = "frames";
  std::string checkpoint;
  std::string load;
  auto* demo = app.add_subcommand("demo", "Run the ball demo and write one P6 image per step");
  add_sizing_flags(*demo, demo_config);
  demo->add_option("--steps", demo_config.steps, "Time steps to run")->capture_default_str();
  demo->add_option("--out-dir", out_dir, "Directory for frame images (empty string disables)")
      ->capture_default_str();
  demo->add_option("--checkpoint", checkpoint, "Save the trained area here when done");
  demo->add_option("--load", load, "Resume from a saved area instead of a fresh one");

  sc::BenchConfig bench_config;
  bench_config.demo.respawn_interval = 200;
  std::size_t bench_steps = 1000;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Time encode / learn / forecast per step");
  add_sizing_flags(*bench, bench_config.demo);
  bench->add_option("--steps", bench_steps, "Timed steps (after warm-up)")->capture_default_str();
  bench->add_option("--warmup", bench_config.warmup_steps, "Untimed leading steps")->capture_default_str();
  bench->add_option("--csv", csv_path, "Write records as CSV");

  std::string inspect_path;
  auto* inspect = app.add_subcommand("inspect", "Summarize a saved area");
  inspect->add_option("path", inspect_path, "Checkpoint file (.scx)");
  inspect->add_option("--checkpoint", inspect_path, "Checkpoint file (.scx), same as the positional path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*demo) {
      demo_config.output_directory = out_dir;
      if (!checkpoint.empty()) demo_config.checkpoint_path = checkpoint;
      if (!load.empty()) demo_config.resume_path = load;
      return cmd_demo(demo_config);
    }
    if (*bench) return cmd_bench(bench_config, bench_steps, csv_path);
    if (*inspect) {
      if (inspect_path.empty()) {
        std::cerr << "error: inspect needs a checkpoint path\n";
        return kExitUsage;
      }
      return cmd_inspect(inspect_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
