#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "simple_cortex/stimuli.hpp"

namespace simple_cortex {

// Binary RGB pixmap ("P6", max value 255). Active input pixels light the green
// channel and predicted pixels the blue channel; red is always 0.
void write_frame_ppm(std::ostream& out, int width, int height, const StimuliVector& input,
                     const StimuliVector& prediction);
void write_frame_ppm(const std::filesystem::path& path, int width, int height, const StimuliVector& input,
                     const StimuliVector& prediction);

// "frame_000042.ppm"
std::string frame_filename(std::size_t step);

}  // namespace simple_cortex
