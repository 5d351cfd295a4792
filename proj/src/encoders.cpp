#include "simple_cortex/encoders.hpp"

#include <stdexcept>
#include <string>

namespace simple_cortex {

namespace {

void require_size(std::size_t got, std::size_t expected, const char* what) {
  if (got != expected) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected) + " values, got " +
                                std::to_string(got));
  }
}

}  // namespace

void set_stimuli_binary(std::span<const std::uint8_t> bits, StimuliVector& out) {
  require_size(bits.size(), out.size(), "set_stimuli_binary");
  for (std::size_t i = 0; i < bits.size(); ++i) out.assign(i, bits[i] != 0);
}

void set_stimuli_threshold(std::span<const double> values, const ThresholdEncoderConfig& cfg, StimuliVector& out) {
  if (cfg.size == 0) throw std::invalid_argument("threshold encoder size must be positive");
  require_size(values.size(), cfg.size, "set_stimuli_threshold");
  require_size(out.size(), cfg.size, "set_stimuli_threshold output");
  for (std::size_t i = 0; i < values.size(); ++i) out.assign(i, values[i] >= cfg.threshold);
}

void copy_neuron_states(const Area& area, StimuliVector& out) {
  require_size(out.size(), area.num_neurons(), "copy_neuron_states");
  set_stimuli_binary(area.states(), out);
}

}  // namespace simple_cortex
