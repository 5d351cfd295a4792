#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace simple_cortex {

inline constexpr std::uint8_t kMaxPermanence = 99;

struct ForestSpec {
  std::uint32_t synapses_per_dendrite = 0;
  std::uint32_t stimuli_size = 0;
  std::uint32_t dendrite_threshold = 0;

  bool operator==(const ForestSpec&) const = default;
};

// Converts a percentage of the dendrite's synapses into an absolute count,
// rounding up: 25% of 50 synapses is 13.
std::uint32_t dendrite_threshold_from_percent(double percent, std::uint32_t synapses_per_dendrite);

// One dendrite slot per neuron, all bound to the same stimuli vector.
// Synapse memory is stored neuron-major: neuron n owns the contiguous run
// [n * S, (n + 1) * S) of both the address and permanence buffers.
class Forest {
 public:
  Forest(std::size_t num_neurons, const ForestSpec& spec);

  const ForestSpec& spec() const noexcept { return spec_; }
  std::uint32_t synapses_per_dendrite() const noexcept { return spec_.synapses_per_dendrite; }
  std::uint32_t stimuli_size() const noexcept { return spec_.stimuli_size; }
  std::uint32_t dendrite_threshold() const noexcept { return spec_.dendrite_threshold; }
  std::size_t synapse_count() const noexcept { return addresses_.size(); }

  std::span<const std::uint32_t> addresses() const noexcept { return addresses_; }
  std::span<std::uint32_t> addresses() noexcept { return addresses_; }
  std::span<const std::uint8_t> permanences() const noexcept { return permanences_; }
  std::span<std::uint8_t> permanences() noexcept { return permanences_; }

  std::span<const std::uint32_t> dendrite_addresses(std::size_t neuron) const noexcept {
    return addresses().subspan(neuron * spec_.synapses_per_dendrite, spec_.synapses_per_dendrite);
  }
  std::span<std::uint32_t> dendrite_addresses(std::size_t neuron) noexcept {
    return addresses().subspan(neuron * spec_.synapses_per_dendrite, spec_.synapses_per_dendrite);
  }
  std::span<const std::uint8_t> dendrite_permanences(std::size_t neuron) const noexcept {
    return permanences().subspan(neuron * spec_.synapses_per_dendrite, spec_.synapses_per_dendrite);
  }
  std::span<std::uint8_t> dendrite_permanences(std::size_t neuron) noexcept {
    return permanences().subspan(neuron * spec_.synapses_per_dendrite, spec_.synapses_per_dendrite);
  }

  bool operator==(const Forest&) const = default;

 private:
  ForestSpec spec_;
  std::vector<std::uint32_t> addresses_;
  std::vector<std::uint8_t> permanences_;
};

// A neuron population with one dendrite per forest. Per-neuron buffers are
// flat arrays indexed by neuron.
//
// overlaps: active-dendrite count for the current step.
// states:   1 = active (after encode) or predicted (after predict).
// boosts:   steps since the neuron was last active, saturating at boost_cap().
class Area {
 public:
  Area(std::size_t num_neurons, std::vector<ForestSpec> forests, std::uint32_t neuron_threshold = 1,
       std::uint32_t predict_threshold = 1);

  // Synapse count an area of this shape would hold, without allocating it.
  static std::uint64_t total_synapses(std::size_t num_neurons, std::span<const ForestSpec> forests);

  std::size_t num_neurons() const noexcept { return states_.size(); }
  std::size_t forest_count() const noexcept { return forests_.size(); }
  const Forest& forest(std::size_t i) const { return forests_.at(i); }
  Forest& forest(std::size_t i) { return forests_.at(i); }
  std::span<const Forest> forests() const noexcept { return forests_; }

  std::uint32_t neuron_threshold() const noexcept { return neuron_threshold_; }
  std::uint32_t predict_threshold() const noexcept { return predict_threshold_; }
  std::uint32_t boost_cap() const noexcept { return boost_cap_; }
  std::uint64_t total_synapses() const noexcept;

  std::span<const std::uint32_t> overlaps() const noexcept { return overlaps_; }
  std::span<std::uint32_t> overlaps() noexcept { return overlaps_; }
  std::span<const std::uint8_t> states() const noexcept { return states_; }
  std::span<std::uint8_t> states() noexcept { return states_; }
  std::span<const std::uint32_t> boosts() const noexcept { return boosts_; }
  std::span<std::uint32_t> boosts() noexcept { return boosts_; }

  std::size_t active_count() const noexcept;

  // Zeroes overlaps and states. Synapses and boosts are left alone.
  void clear_transient() noexcept;

  // Compares persistent state only: forests, thresholds and boosts.
  bool same_memory(const Area& other) const;

 private:
  std::vector<Forest> forests_;
  std::uint32_t neuron_threshold_;
  std::uint32_t predict_threshold_;
  std::uint32_t boost_cap_ = 0;
  std::vector<std::uint32_t> overlaps_;
  std::vector<std::uint8_t> states_;
  std::vector<std::uint32_t> boosts_;
};

}  // namespace simple_cortex
