#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "simple_cortex/area.hpp"
#include "simple_cortex/stimuli.hpp"

namespace simple_cortex {

struct ThresholdEncoderConfig {
  double threshold = 0.0;
  std::size_t size = 0;
};

// Copies a bit array into `out`. Any nonzero byte counts as active.
void set_stimuli_binary(std::span<const std::uint8_t> bits, StimuliVector& out);

// Bit i becomes active iff values[i] >= cfg.threshold.
void set_stimuli_threshold(std::span<const double> values, const ThresholdEncoderConfig& cfg, StimuliVector& out);

// Feeds the area's neuron states back in as stimuli (the sequence-learning
// feedback path). `out` must have one stimulus per neuron.
void copy_neuron_states(const Area& area, StimuliVector& out);

}  // namespace simple_cortex
