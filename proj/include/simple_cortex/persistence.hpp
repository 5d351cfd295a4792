#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "simple_cortex/area.hpp"

namespace simple_cortex {

// Checkpoint layout (.scx), all integers little-endian:
//
//   "SCX1" | version | numNeurons | forestCount | nThresh | pThresh   (u32 each)
//   per forest:
//     synapsesPerDendrite | stimuliSize | dThresh                    (u32 each)
//     addresses    u32 x numNeurons * synapsesPerDendrite
//     permanences  u8  x numNeurons * synapsesPerDendrite
//   boosts         u32 x numNeurons
//
// Overlaps and states are per-step scratch and are not stored.
inline constexpr char kAreaMagic[4] = {'S', 'C', 'X', '1'};
inline constexpr std::uint32_t kAreaFormatVersion = 1;
inline constexpr std::size_t kAreaHeaderBytes = 24;

enum class LoadErrorKind { bad_magic, unsupported_version, truncated, invalid_value, io };

class LoadError : public std::runtime_error {
 public:
  LoadError(LoadErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  LoadErrorKind kind() const noexcept { return kind_; }

 private:
  LoadErrorKind kind_;
};

class SaveError : public std::runtime_error {
 public:
  SaveError(std::size_t bytes_written, const std::string& what)
      : std::runtime_error(what + " after " + std::to_string(bytes_written) + " bytes"), bytes_(bytes_written) {}
  std::size_t bytes_written() const noexcept { return bytes_; }

 private:
  std::size_t bytes_;
};

// Size in bytes of the checkpoint save_area writes for `area`.
std::size_t checkpoint_size(const Area& area);

void save_area(const Area& area, std::ostream& sink);
Area load_area(std::istream& source);

void save_area_file(const Area& area, const std::filesystem::path& path);
Area load_area_file(const std::filesystem::path& path);

}  // namespace simple_cortex
