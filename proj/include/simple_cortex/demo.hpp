#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "simple_cortex/algorithms.hpp"
#include "simple_cortex/area.hpp"
#include "simple_cortex/ball_env.hpp"
#include "simple_cortex/stimuli.hpp"

namespace simple_cortex {

// Forest 0 observes the scene; forest 1 observes the previous step's neuron
// states and carries the sequence memory used for forecasting.
inline constexpr std::size_t kSceneForest = 0;
inline constexpr std::size_t kContextForest = 1;

struct DemoConfig {
  std::size_t neurons = 50000;
  std::uint32_t forest0_synapses = 50;
  double threshold_percent = 25.0;
  std::size_t forecast_depth = 20;
  std::size_t steps = 500;
  std::uint64_t seed = 1;
  int width = 100;
  int height = 100;
  std::uint32_t neuron_threshold = 1;
  std::uint32_t predict_threshold = 1;
  // Respawn the ball every N steps; 0 keeps a single trajectory.
  std::size_t respawn_interval = 0;
  // Empty means no images are written.
  std::filesystem::path output_directory;
  std::optional<std::filesystem::path> checkpoint_path;
  std::optional<std::filesystem::path> resume_path;
};

// Throws std::invalid_argument describing the first bad field.
void validate(const DemoConfig& config);

// Scene forest with `forest0_synapses` synapses at the configured percentage
// threshold, then a single-synapse context forest over the neuron states.
std::vector<ForestSpec> demo_forest_specs(const DemoConfig& config);

// Fresh area over demo_forest_specs().
Area make_demo_area(const DemoConfig& config);

// One ball environment wired to one area. Each step runs, in order:
//   advance_environment  step the ball and render it into the scene stimuli
//   encode               encode scene + previous states
//   learn                learn on the same bindings
//   feedback             previous-states stimuli <- current neuron states
//   forecast             union of forecast_depth predict/decode frames
class BallDemo {
 public:
  BallDemo(const DemoConfig& config, Area area);

  void advance_environment();
  EncodeResult encode();
  void learn();
  void feedback();
  void forecast();
  void step();

  std::size_t step_index() const noexcept { return step_index_; }
  const Area& area() const noexcept { return area_; }
  Area& area() noexcept { return area_; }
  const BallEnv& env() const noexcept { return env_; }
  BallEnv& env() noexcept { return env_; }
  const StimuliVector& scene() const noexcept { return scene_; }
  const StimuliVector& previous_states() const noexcept { return previous_states_; }
  const StimuliVector& prediction() const noexcept { return prediction_; }
  const DemoConfig& config() const noexcept { return config_; }

 private:
  DemoConfig config_;
  Area area_;
  BallEnv env_;
  StimuliVector scene_;
  StimuliVector previous_states_;
  StimuliVector prediction_;
  std::size_t step_index_ = 0;
};

// Runs the full demo: loads or creates the area, writes one image per step to
// the output directory (if set) and a checkpoint at the end (if set).
// Progress goes to `log` when non-null.
void run_demo(const DemoConfig& config, std::ostream* log = nullptr);

}  // namespace simple_cortex
