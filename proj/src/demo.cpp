#include "simple_cortex/demo.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "simple_cortex/encoders.hpp"
#include "simple_cortex/persistence.hpp"
#include "simple_cortex/ppm.hpp"

namespace simple_cortex {

namespace {

BallPhysics physics_for(const DemoConfig& config) {
  BallPhysics physics;
  physics.width = config.width;
  physics.height = config.height;
  return physics;
}

std::size_t pixel_count(const DemoConfig& config) {
  return static_cast<std::size_t>(config.width) * static_cast<std::size_t>(config.height);
}

}  // namespace

void validate(const DemoConfig& config) {
  if (config.neurons == 0) throw std::invalid_argument("neurons must be positive");
  if (config.forest0_synapses == 0) throw std::invalid_argument("forest 0 needs at least one synapse");
  if (!(config.threshold_percent > 0.0 && config.threshold_percent <= 100.0)) {
    throw std::invalid_argument("threshold percent must be in (0, 100]");
  }
  constexpr int min_side = 2 * BallEnv::kRadius + 2;
  if (config.width < min_side || config.height < min_side) {
    throw std::invalid_argument("image must be at least " + std::to_string(min_side) + " pixels per side");
  }
  if (config.neuron_threshold == 0 || config.neuron_threshold > 2 || config.predict_threshold == 0 ||
      config.predict_threshold > 2) {
    throw std::invalid_argument("neuron and predict thresholds must be 1 or 2");
  }
}

std::vector<ForestSpec> demo_forest_specs(const DemoConfig& config) {
  validate(config);
  return {
      {config.forest0_synapses, static_cast<std::uint32_t>(pixel_count(config)),
       dendrite_threshold_from_percent(config.threshold_percent, config.forest0_synapses)},
      {1, static_cast<std::uint32_t>(config.neurons), 1},
  };
}

Area make_demo_area(const DemoConfig& config) {
  return Area(config.neurons, demo_forest_specs(config), config.neuron_threshold, config.predict_threshold);
}

BallDemo::BallDemo(const DemoConfig& config, Area area)
    : config_(config),
      area_(std::move(area)),
      env_(config.seed, physics_for(config)),
      scene_(env_.pixel_count()),
      previous_states_(area_.num_neurons()),
      prediction_(env_.pixel_count()) {
  if (area_.forest_count() != 2) throw std::invalid_argument("ball demo needs an area with exactly 2 forests");
  if (area_.forest(kSceneForest).stimuli_size() != env_.pixel_count()) {
    throw std::invalid_argument("scene forest observes " + std::to_string(area_.forest(kSceneForest).stimuli_size()) +
                                " stimuli but the image has " + std::to_string(env_.pixel_count()) + " pixels");
  }
  if (area_.forest(kContextForest).stimuli_size() != area_.num_neurons()) {
    throw std::invalid_argument("context forest must observe one stimulus per neuron");
  }
}

void BallDemo::advance_environment() {
  if (config_.respawn_interval > 0 && step_index_ > 0 && step_index_ % config_.respawn_interval == 0) {
    env_.respawn();
  } else {
    env_.step();
  }
  env_.render(scene_);
}

EncodeResult BallDemo::encode() {
  return simple_cortex::encode(area_, {Binding{kSceneForest, scene_}, Binding{kContextForest, previous_states_}});
}

void BallDemo::learn() {
  simple_cortex::learn(area_, {Binding{kSceneForest, scene_}, Binding{kContextForest, previous_states_}});
}

void BallDemo::feedback() { copy_neuron_states(area_, previous_states_); }

void BallDemo::forecast() {
  prediction_.clear();
  for (const auto& frame : simple_cortex::forecast(area_, kContextForest, kSceneForest, config_.forecast_depth)) {
    prediction_ |= frame;
  }
}

void BallDemo::step() {
  advance_environment();
  encode();
  learn();
  feedback();
  forecast();
  ++step_index_;
}

void run_demo(const DemoConfig& config, std::ostream* log) {
  validate(config);
  Area area = config.resume_path ? load_area_file(*config.resume_path) : make_demo_area(config);
  BallDemo demo(config, std::move(area));

  if (!config.output_directory.empty()) std::filesystem::create_directories(config.output_directory);
  for (std::size_t i = 0; i < config.steps; ++i) {
    demo.step();
    if (!config.output_directory.empty()) {
      write_frame_ppm(config.output_directory / frame_filename(i), config.width, config.height, demo.scene(),
                      demo.prediction());
    }
    if (log != nullptr && (i + 1) % 100 == 0) {
      *log << "step " << (i + 1) << '/' << config.steps << ": " << demo.area().active_count() << " active, "
           << demo.prediction().count() << " predicted pixels\n";
    }
  }
  if (config.checkpoint_path) {
    save_area_file(demo.area(), *config.checkpoint_path);
    if (log != nullptr) *log << "checkpoint written to " << config.checkpoint_path->string() << '\n';
  }
}

}  // namespace simple_cortex
