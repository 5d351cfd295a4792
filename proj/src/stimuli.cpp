#include "simple_cortex/stimuli.hpp"

#include <algorithm>
#include <stdexcept>

namespace simple_cortex {

StimuliVector::StimuliVector(std::size_t size) : states_(size, 0) {
  if (size == 0) {
    throw std::invalid_argument("stimuli vector size must be positive");
  }
}

StimuliVector StimuliVector::from_string(std::string_view bits) {
  StimuliVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("stimuli string may contain only '0' and '1'");
    }
  }
  return out;
}

void StimuliVector::clear() noexcept { std::fill(states_.begin(), states_.end(), 0); }

std::size_t StimuliVector::count() const noexcept {
  return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), std::uint8_t{1}));
}

std::vector<std::uint32_t> StimuliVector::active_indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] != 0) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

StimuliVector& StimuliVector::operator|=(const StimuliVector& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("cannot union stimuli vectors of different sizes");
  }
  for (std::size_t i = 0; i < states_.size(); ++i) states_[i] |= other.states_[i];
  return *this;
}

std::string StimuliVector::to_string() const {
  std::string out(states_.size(), '0');
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] != 0) out[i] = '1';
  }
  return out;
}

}  // namespace simple_cortex
