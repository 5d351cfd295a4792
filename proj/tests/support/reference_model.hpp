#pragma once

// Unoptimized transcription of the Simple Cortex routines over plain vectors,
// used as an oracle for the library. It deliberately shares no code with
// src/: loops follow the textbook per-neuron / per-synapse / per-stimulus
// shape, and the move pass scans raw stimulus addresses instead of a
// precomputed active list.

#include <cstdint>
#include <utility>
#include <vector>

namespace simple_cortex::reference {

struct RefForest {
  int synapses = 0;
  int stimuli = 0;
  int threshold = 0;
  std::vector<std::uint32_t> addrs;
  std::vector<int> perms;
};

struct RefArea {
  int neurons = 0;
  int n_thresh = 1;
  int p_thresh = 1;
  std::vector<RefForest> forests;
  std::vector<int> overlaps;
  std::vector<int> states;
  std::vector<int> boosts;

  int boost_cap() const {
    int cap = 0;
    for (const auto& f : forests) cap = f.stimuli > cap ? f.stimuli : cap;
    return cap;
  }
};

// (forest index, stimuli bits)
using RefBinding = std::pair<int, std::vector<int>>;

inline void ref_overlap(RefArea& a, const RefBinding& b) {
  const RefForest& f = a.forests[b.first];
  for (int n = 0; n < a.neurons; ++n) {
    int dendrite_overlap = 0;
    for (int k = 0; k < f.synapses; ++k) {
      const int s = n * f.synapses + k;
      if (f.perms[s] > 0 && b.second[f.addrs[s]] > 0) dendrite_overlap++;
    }
    if (dendrite_overlap >= f.threshold) a.overlaps[n]++;
  }
}

inline void ref_clear(RefArea& a) {
  for (int n = 0; n < a.neurons; ++n) {
    a.overlaps[n] = 0;
    a.states[n] = 0;
  }
}

// Returns the boost winner, or -1 when inhibition occurred.
inline int ref_encode(RefArea& a, const std::vector<RefBinding>& bindings) {
  ref_clear(a);
  for (const auto& b : bindings) ref_overlap(a, b);
  bool inhibition = false;
  for (int n = 0; n < a.neurons; ++n) {
    if (a.boosts[n] < a.boost_cap()) a.boosts[n]++;
    if (a.overlaps[n] >= a.n_thresh) {
      a.boosts[n] = 0;
      a.states[n] = 1;
      inhibition = true;
    }
  }
  if (inhibition) return -1;
  int winner = 0;
  for (int n = 1; n < a.neurons; ++n) {
    if (a.boosts[n] > a.boosts[winner]) winner = n;
  }
  a.states[winner] = 1;
  a.boosts[winner] = 0;
  return winner;
}

inline void ref_learn(RefArea& a, const std::vector<RefBinding>& bindings) {
  for (int n = 0; n < a.neurons; ++n) {
    if (a.states[n] == 0) continue;
    for (const auto& b : bindings) {
      RefForest& f = a.forests[b.first];
      const std::vector<int>& stim = b.second;
      const int first = n * f.synapses;
      const int last = first + f.synapses;

      for (int s = first; s < last; ++s) {
        if (f.perms[s] > 0) {
          if (stim[f.addrs[s]] > 0) {
            if (f.perms[s] < 99) f.perms[s]++;
          } else {
            f.perms[s]--;
          }
        }
      }

      int j = 0;
      for (int s = first; s < last; ++s) {
        if (f.perms[s] != 0) continue;
        for (int i = j; i < f.stimuli; ++i) {
          if (stim[i] == 0) continue;
          bool used = false;
          for (int s2 = first; s2 < last; ++s2) {
            if (f.perms[s2] > 0 && f.addrs[s2] == static_cast<std::uint32_t>(i)) {
              used = true;
              break;
            }
          }
          if (!used) {
            f.addrs[s] = static_cast<std::uint32_t>(i);
            f.perms[s] = 1;
            j = i + 1;
            break;
          }
        }
      }
    }
  }
}

inline void ref_predict(RefArea& a, const std::vector<RefBinding>& bindings) {
  ref_clear(a);
  for (const auto& b : bindings) ref_overlap(a, b);
  for (int n = 0; n < a.neurons; ++n) {
    if (a.overlaps[n] >= a.p_thresh) a.states[n] = 1;
  }
}

inline std::vector<int> ref_decode(const RefArea& a, int forest) {
  const RefForest& f = a.forests[forest];
  std::vector<int> out(f.stimuli, 0);
  for (int n = 0; n < a.neurons; ++n) {
    if (a.states[n] == 0) continue;
    for (int k = 0; k < f.synapses; ++k) {
      const int s = n * f.synapses + k;
      if (f.perms[s] > 0) out[f.addrs[s]] = 1;
    }
  }
  return out;
}

}  // namespace simple_cortex::reference
