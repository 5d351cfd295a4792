#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simple_cortex {

// Binary activity buffer. One byte per stimulus, every byte 0 or 1.
class StimuliVector {
 public:
  explicit StimuliVector(std::size_t size);

  // Parses a string of '0'/'1' characters; character i is stimulus i.
  static StimuliVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return states_.size(); }

  bool test(std::size_t i) const noexcept { return states_[i] != 0; }
  void set(std::size_t i) noexcept { states_[i] = 1; }
  void reset(std::size_t i) noexcept { states_[i] = 0; }
  void assign(std::size_t i, bool active) noexcept { states_[i] = active ? 1 : 0; }

  void clear() noexcept;
  std::size_t count() const noexcept;

  // Ascending addresses of active stimuli.
  std::vector<std::uint32_t> active_indices() const;

  std::span<const std::uint8_t> states() const noexcept { return states_; }

  StimuliVector& operator|=(const StimuliVector& other);
  bool operator==(const StimuliVector&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::uint8_t> states_;
};

}  // namespace simple_cortex
