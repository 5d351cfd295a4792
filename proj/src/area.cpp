#include "simple_cortex/area.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace simple_cortex {

std::uint32_t dendrite_threshold_from_percent(double percent, std::uint32_t synapses_per_dendrite) {
  if (!(percent > 0.0 && percent <= 100.0)) {
    throw std::invalid_argument("threshold percent must be in (0, 100], got " + std::to_string(percent));
  }
  const double count = percent * static_cast<double>(synapses_per_dendrite) / 100.0;
  return static_cast<std::uint32_t>(std::ceil(count));
}

namespace {

void validate_spec(const ForestSpec& spec) {
  if (spec.synapses_per_dendrite == 0) {
    throw std::invalid_argument("forest needs at least one synapse per dendrite");
  }
  if (spec.stimuli_size == 0) {
    throw std::invalid_argument("forest stimuli size must be positive");
  }
  if (spec.dendrite_threshold > spec.synapses_per_dendrite) {
    throw std::invalid_argument("dendrite threshold " + std::to_string(spec.dendrite_threshold) +
                                " exceeds synapses per dendrite " +
                                std::to_string(spec.synapses_per_dendrite));
  }
}

}  // namespace

Forest::Forest(std::size_t num_neurons, const ForestSpec& spec) : spec_(spec) {
  validate_spec(spec);
  const std::size_t n = num_neurons * spec.synapses_per_dendrite;
  addresses_.assign(n, 0);
  permanences_.assign(n, 0);
}

Area::Area(std::size_t num_neurons, std::vector<ForestSpec> forests, std::uint32_t neuron_threshold,
           std::uint32_t predict_threshold)
    : neuron_threshold_(neuron_threshold), predict_threshold_(predict_threshold) {
  if (num_neurons == 0) throw std::invalid_argument("area needs at least one neuron");
  if (num_neurons > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("neuron count exceeds 32-bit range");
  }
  if (forests.empty()) throw std::invalid_argument("area needs at least one forest");
  if (neuron_threshold == 0 || neuron_threshold > forests.size()) {
    throw std::invalid_argument("neuron threshold must be in [1, forest count]");
  }
  if (predict_threshold == 0 || predict_threshold > forests.size()) {
    throw std::invalid_argument("predict threshold must be in [1, forest count]");
  }
  for (const auto& spec : forests) validate_spec(spec);

  forests_.reserve(forests.size());
  for (const auto& spec : forests) {
    forests_.emplace_back(num_neurons, spec);
    boost_cap_ = std::max(boost_cap_, spec.stimuli_size);
  }
  overlaps_.assign(num_neurons, 0);
  states_.assign(num_neurons, 0);
  boosts_.assign(num_neurons, 0);
}

std::uint64_t Area::total_synapses(std::size_t num_neurons, std::span<const ForestSpec> forests) {
  std::uint64_t per_neuron = 0;
  for (const auto& spec : forests) per_neuron += spec.synapses_per_dendrite;
  return per_neuron * num_neurons;
}

std::uint64_t Area::total_synapses() const noexcept {
  std::uint64_t total = 0;
  for (const auto& f : forests_) total += f.synapse_count();
  return total;
}

std::size_t Area::active_count() const noexcept {
  return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), std::uint8_t{1}));
}

void Area::clear_transient() noexcept {
  std::fill(overlaps_.begin(), overlaps_.end(), 0u);
  std::fill(states_.begin(), states_.end(), std::uint8_t{0});
}

bool Area::same_memory(const Area& other) const {
  return forests_ == other.forests_ && neuron_threshold_ == other.neuron_threshold_ &&
         predict_threshold_ == other.predict_threshold_ && boosts_ == other.boosts_;
}

}  // namespace simple_cortex
