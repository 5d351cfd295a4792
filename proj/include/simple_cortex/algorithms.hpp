#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "simple_cortex/area.hpp"
#include "simple_cortex/stimuli.hpp"

namespace simple_cortex {

// Pairs one forest of an area with the stimuli vector it observes for a call.
// The stimuli vector must outlive the call and match the forest's stimuli size.
struct Binding {
  std::size_t forest;
  const StimuliVector& stimuli;
};

struct EncodeResult {
  // True when at least one neuron reached the activation threshold.
  bool inhibited = false;
  // Set when no neuron was confident and the boost path recruited one.
  std::optional<std::size_t> boost_winner;
  std::size_t active_count = 0;
};

// Checks forest indices, stimuli sizes and forest uniqueness. Throws
// std::invalid_argument on the first problem found.
void validate_bindings(const Area& area, std::span<const Binding> bindings);

// For every neuron, counts the synapses on its dendrite in `binding.forest`
// that are connected (permanence > 0) and see an active stimulus. Each neuron
// whose count reaches the forest's dendrite threshold gets its overlap
// incremented by one. Does not clear overlaps first.
void overlap_synapses(Area& area, const Binding& binding);

// Increments every boost (saturating at the boost cap), then activates every
// neuron whose overlap reaches the neuron threshold, zeroing its boost.
// Returns the inhibition flag: true iff any neuron activated.
bool activate_neurons(Area& area);

// Activates the single neuron with the largest boost, lowest index on ties,
// and zeroes its boost. Returns the winner.
std::size_t boost_select(Area& area);

// Recognize-or-recruit pass. Clears overlaps and states, overlaps every
// binding, activates confident neurons and falls back to boost_select when
// none were confident. Always leaves at least one neuron active.
EncodeResult encode(Area& area, std::span<const Binding> bindings);
inline EncodeResult encode(Area& area, std::initializer_list<Binding> bindings) {
  return encode(area, std::span<const Binding>(bindings.begin(), bindings.size()));
}

// Hebbian update of the dendrites of active neurons, for each binding in turn:
//   grow:   connected synapse on an active stimulus, permanence + 1 (max 99)
//   shrink: connected synapse on an inactive stimulus, permanence - 1
//   move:   each unconnected synapse takes the lowest active stimulus address
//           at or after a per-dendrite cursor that no connected synapse of
//           the dendrite already uses; permanence becomes 1 and the cursor
//           moves past the taken address. Synapses that find no free active
//           stimulus stay unconnected.
// Inactive neurons are untouched.
void learn(Area& area, std::span<const Binding> bindings);
inline void learn(Area& area, std::initializer_list<Binding> bindings) {
  learn(area, std::span<const Binding>(bindings.begin(), bindings.size()));
}

// Recognition without inhibition or boosting: clears overlaps and states,
// overlaps every binding and marks neurons whose overlap reaches the predict
// threshold. Boosts are never written. Returns the number of predicted neurons.
std::size_t predict(Area& area, std::span<const Binding> bindings);
inline std::size_t predict(Area& area, std::initializer_list<Binding> bindings) {
  return predict(area, std::span<const Binding>(bindings.begin(), bindings.size()));
}

// Writes into `out` the union of connected synapse addresses, in forest
// `forest`, of every neuron with state 1. `out` is cleared first.
void decode(const Area& area, std::size_t forest, StimuliVector& out);

// Repeats `steps` times: feed the current neuron states through
// `context_forest` with predict, then decode the predicted neurons through
// `decode_forest`. Returns the decoded frames in time order. Synapses and
// boosts are unchanged; overlaps and states are restored on return.
std::vector<StimuliVector> forecast(Area& area, std::size_t context_forest, std::size_t decode_forest,
                                    std::size_t steps);

}  // namespace simple_cortex
