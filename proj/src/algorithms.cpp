#include "simple_cortex/algorithms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace simple_cortex {

void validate_bindings(const Area& area, std::span<const Binding> bindings) {
  std::vector<bool> seen(area.forest_count(), false);
  for (const auto& b : bindings) {
    if (b.forest >= area.forest_count()) {
      throw std::invalid_argument("binding names forest " + std::to_string(b.forest) + " but area has " +
                                  std::to_string(area.forest_count()));
    }
    if (seen[b.forest]) {
      throw std::invalid_argument("forest " + std::to_string(b.forest) + " bound more than once");
    }
    seen[b.forest] = true;
    const auto expected = area.forest(b.forest).stimuli_size();
    if (b.stimuli.size() != expected) {
      throw std::invalid_argument("forest " + std::to_string(b.forest) + " expects " + std::to_string(expected) +
                                  " stimuli, got " + std::to_string(b.stimuli.size()));
    }
  }
}

namespace {

void overlap_unchecked(Area& area, const Binding& binding) {
  const Forest& forest = area.forest(binding.forest);
  const std::size_t synapses = forest.synapses_per_dendrite();
  const std::uint32_t threshold = forest.dendrite_threshold();
  const auto addrs = forest.addresses();
  const auto perms = forest.permanences();
  const auto stimuli = binding.stimuli.states();
  auto overlaps = area.overlaps();

  for (std::size_t n = 0, base = 0; n < area.num_neurons(); ++n, base += synapses) {
    std::uint32_t dendrite_overlap = 0;
    for (std::size_t s = base; s < base + synapses; ++s) {
      if (perms[s] > 0 && stimuli[addrs[s]] != 0) ++dendrite_overlap;
    }
    if (dendrite_overlap >= threshold) ++overlaps[n];
  }
}

// Grow/shrink then move for one dendrite. `active` lists the active stimulus
// addresses of the bound vector in ascending order; `used` is scratch.
void learn_dendrite(std::span<std::uint32_t> addrs, std::span<std::uint8_t> perms, const StimuliVector& stimuli,
                    std::span<const std::uint32_t> active, std::vector<std::uint32_t>& used) {
  used.clear();
  for (std::size_t s = 0; s < perms.size(); ++s) {
    if (perms[s] == 0) continue;
    if (stimuli.test(addrs[s])) {
      if (perms[s] < kMaxPermanence) ++perms[s];
    } else {
      --perms[s];
    }
    if (perms[s] > 0) used.push_back(addrs[s]);
  }
  std::sort(used.begin(), used.end());

  std::size_t cursor = 0;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    if (perms[s] != 0) continue;
    while (cursor < active.size() && std::binary_search(used.begin(), used.end(), active[cursor])) ++cursor;
    if (cursor == active.size()) break;
    const std::uint32_t address = active[cursor++];
    addrs[s] = address;
    perms[s] = 1;
    used.insert(std::upper_bound(used.begin(), used.end(), address), address);
  }
}

}  // namespace

void overlap_synapses(Area& area, const Binding& binding) {
  validate_bindings(area, std::span<const Binding>(&binding, 1));
  overlap_unchecked(area, binding);
}

bool activate_neurons(Area& area) {
  const std::uint32_t cap = area.boost_cap();
  const std::uint32_t threshold = area.neuron_threshold();
  const auto overlaps = area.overlaps();
  auto boosts = area.boosts();
  auto states = area.states();
  bool inhibition = false;
  for (std::size_t n = 0; n < area.num_neurons(); ++n) {
    if (boosts[n] < cap) ++boosts[n];
    if (overlaps[n] >= threshold) {
      boosts[n] = 0;
      states[n] = 1;
      inhibition = true;
    }
  }
  return inhibition;
}

std::size_t boost_select(Area& area) {
  auto boosts = area.boosts();
  const auto winner = static_cast<std::size_t>(std::max_element(boosts.begin(), boosts.end()) - boosts.begin());
  area.states()[winner] = 1;
  boosts[winner] = 0;
  return winner;
}

EncodeResult encode(Area& area, std::span<const Binding> bindings) {
  validate_bindings(area, bindings);
  area.clear_transient();
  for (const auto& b : bindings) overlap_unchecked(area, b);

  EncodeResult result;
  result.inhibited = activate_neurons(area);
  if (!result.inhibited) result.boost_winner = boost_select(area);
  result.active_count = area.active_count();
  return result;
}

void learn(Area& area, std::span<const Binding> bindings) {
  validate_bindings(area, bindings);
  const auto states = area.states();
  std::vector<std::uint32_t> used;

  for (const auto& b : bindings) {
    Forest& forest = area.forest(b.forest);
    const auto active = b.stimuli.active_indices();
    for (std::size_t n = 0; n < area.num_neurons(); ++n) {
      if (states[n] == 0) continue;
      learn_dendrite(forest.dendrite_addresses(n), forest.dendrite_permanences(n), b.stimuli, active, used);
    }
  }
}

std::size_t predict(Area& area, std::span<const Binding> bindings) {
  validate_bindings(area, bindings);
  area.clear_transient();
  for (const auto& b : bindings) overlap_unchecked(area, b);

  const std::uint32_t threshold = area.predict_threshold();
  const auto overlaps = area.overlaps();
  auto states = area.states();
  std::size_t predicted = 0;
  for (std::size_t n = 0; n < area.num_neurons(); ++n) {
    if (overlaps[n] >= threshold) {
      states[n] = 1;
      ++predicted;
    }
  }
  return predicted;
}

void decode(const Area& area, std::size_t forest_index, StimuliVector& out) {
  if (forest_index >= area.forest_count()) {
    throw std::invalid_argument("decode names forest " + std::to_string(forest_index) + " but area has " +
                                std::to_string(area.forest_count()));
  }
  const Forest& forest = area.forest(forest_index);
  if (out.size() != forest.stimuli_size()) {
    throw std::invalid_argument("decode output has " + std::to_string(out.size()) + " stimuli, forest expects " +
                                std::to_string(forest.stimuli_size()));
  }
  out.clear();
  const auto states = area.states();
  for (std::size_t n = 0; n < area.num_neurons(); ++n) {
    if (states[n] == 0) continue;
    const auto addrs = forest.dendrite_addresses(n);
    const auto perms = forest.dendrite_permanences(n);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      if (perms[s] > 0) out.set(addrs[s]);
    }
  }
}

std::vector<StimuliVector> forecast(Area& area, std::size_t context_forest, std::size_t decode_forest,
                                    std::size_t steps) {
  if (context_forest >= area.forest_count() || decode_forest >= area.forest_count()) {
    throw std::invalid_argument("forecast forest index out of range");
  }
  if (area.forest(context_forest).stimuli_size() != area.num_neurons()) {
    throw std::invalid_argument("forecast context forest must observe the area's own neuron states");
  }
  std::vector<StimuliVector> frames;
  if (steps == 0) return frames;
  frames.reserve(steps);

  const std::vector<std::uint32_t> saved_overlaps(area.overlaps().begin(), area.overlaps().end());
  const std::vector<std::uint8_t> saved_states(area.states().begin(), area.states().end());

  StimuliVector context(area.num_neurons());
  for (std::size_t step = 0; step < steps; ++step) {
    const auto states = area.states();
    for (std::size_t n = 0; n < states.size(); ++n) context.assign(n, states[n] != 0);
    predict(area, {Binding{context_forest, context}});
    StimuliVector decoded(area.forest(decode_forest).stimuli_size());
    decode(area, decode_forest, decoded);
    frames.push_back(std::move(decoded));
  }

  std::copy(saved_overlaps.begin(), saved_overlaps.end(), area.overlaps().begin());
  std::copy(saved_states.begin(), saved_states.end(), area.states().begin());
  return frames;
}

}  // namespace simple_cortex
