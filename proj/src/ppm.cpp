#include "simple_cortex/ppm.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace simple_cortex {

void write_frame_ppm(std::ostream& out, int width, int height, const StimuliVector& input,
                     const StimuliVector& prediction) {
  const auto pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (width <= 0 || height <= 0 || input.size() != pixels || prediction.size() != pixels) {
    throw std::invalid_argument("frame buffers do not match image dimensions");
  }
  out << "P6\n" << width << ' ' << height << "\n255\n";
  std::vector<char> rgb(pixels * 3, 0);
  for (std::size_t p = 0; p < pixels; ++p) {
    if (input.test(p)) rgb[p * 3 + 1] = static_cast<char>(255);
    if (prediction.test(p)) rgb[p * 3 + 2] = static_cast<char>(255);
  }
  out.write(rgb.data(), static_cast<std::streamsize>(rgb.size()));
  if (!out) throw std::runtime_error("failed to write pixmap");
}

void write_frame_ppm(const std::filesystem::path& path, int width, int height, const StimuliVector& input,
                     const StimuliVector& prediction) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_frame_ppm(out, width, height, input, prediction);
}

std::string frame_filename(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%06zu.ppm", step);
  return buf;
}

}  // namespace simple_cortex
