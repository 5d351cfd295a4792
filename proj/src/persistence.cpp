#include "simple_cortex/persistence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <vector>

namespace simple_cortex {

namespace {

class Writer {
 public:
  explicit Writer(std::ostream& sink) : sink_(sink) {}

  void bytes(const void* data, std::size_t n) {
    sink_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!sink_) throw SaveError(written_, "checkpoint write failed");
    written_ += n;
  }

  void u32(std::uint32_t v) {
    const std::array<unsigned char, 4> le{static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    bytes(le.data(), le.size());
  }

  void u32_array(std::span<const std::uint32_t> values) {
    if constexpr (std::endian::native == std::endian::little) {
      bytes(values.data(), values.size_bytes());
    } else {
      for (auto v : values) u32(v);
    }
  }

  void flush() {
    sink_.flush();
    if (!sink_) throw SaveError(written_, "checkpoint flush failed");
  }

 private:
  std::ostream& sink_;
  std::size_t written_ = 0;
};

class Reader {
 public:
  explicit Reader(std::istream& source) : source_(source) {
    const auto here = source_.tellg();
    if (here != std::streampos(-1)) {
      source_.seekg(0, std::ios::end);
      const auto end = source_.tellg();
      source_.seekg(here);
      if (end != std::streampos(-1) && source_) remaining_ = static_cast<std::uint64_t>(end - here);
    }
    source_.clear();
  }

  // Rejects a declared payload that cannot fit in what is left of a seekable
  // stream, before anything is allocated for it.
  void expect(std::uint64_t n, const char* what) const {
    if (remaining_ && n > *remaining_) {
      throw LoadError(LoadErrorKind::truncated, std::string("checkpoint truncated: ") + what + " needs " +
                                                    std::to_string(n) + " bytes, " + std::to_string(*remaining_) +
                                                    " remain");
    }
  }

  void bytes(void* data, std::size_t n, const char* what) {
    expect(n, what);
    source_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(source_.gcount()) != n) {
      throw LoadError(LoadErrorKind::truncated, std::string("checkpoint truncated while reading ") + what);
    }
    if (remaining_) *remaining_ -= n;
  }

  std::uint32_t u32(const char* what) {
    std::array<unsigned char, 4> le{};
    bytes(le.data(), le.size(), what);
    return static_cast<std::uint32_t>(le[0]) | static_cast<std::uint32_t>(le[1]) << 8 |
           static_cast<std::uint32_t>(le[2]) << 16 | static_cast<std::uint32_t>(le[3]) << 24;
  }

  std::vector<std::uint32_t> u32_array(std::size_t count, const char* what) {
    expect(static_cast<std::uint64_t>(count) * 4, what);
    std::vector<std::uint32_t> out(count);
    if constexpr (std::endian::native == std::endian::little) {
      bytes(out.data(), count * 4, what);
    } else {
      for (auto& v : out) v = u32(what);
    }
    return out;
  }

  std::vector<std::uint8_t> u8_array(std::size_t count, const char* what) {
    expect(count, what);
    std::vector<std::uint8_t> out(count);
    bytes(out.data(), count, what);
    return out;
  }

 private:
  std::istream& source_;
  std::optional<std::uint64_t> remaining_;
};

LoadError invalid(const std::string& what) { return LoadError(LoadErrorKind::invalid_value, what); }

struct ForestPayload {
  ForestSpec spec;
  std::vector<std::uint32_t> addresses;
  std::vector<std::uint8_t> permanences;
};

void check_forest(std::size_t index, std::size_t num_neurons, const ForestPayload& f) {
  const auto name = "forest " + std::to_string(index);
  for (std::size_t s = 0; s < f.permanences.size(); ++s) {
    if (f.permanences[s] > kMaxPermanence) {
      throw invalid(name + ": permanence " + std::to_string(f.permanences[s]) + " above " +
                    std::to_string(kMaxPermanence) + " at synapse " + std::to_string(s));
    }
    if (f.addresses[s] >= f.spec.stimuli_size) {
      throw invalid(name + ": address " + std::to_string(f.addresses[s]) + " outside stimuli size " +
                    std::to_string(f.spec.stimuli_size) + " at synapse " + std::to_string(s));
    }
  }
  std::vector<std::uint32_t> connected;
  const std::size_t synapses = f.spec.synapses_per_dendrite;
  for (std::size_t n = 0; n < num_neurons; ++n) {
    connected.clear();
    for (std::size_t s = n * synapses; s < (n + 1) * synapses; ++s) {
      if (f.permanences[s] > 0) connected.push_back(f.addresses[s]);
    }
    std::sort(connected.begin(), connected.end());
    if (std::adjacent_find(connected.begin(), connected.end()) != connected.end()) {
      throw invalid(name + ": neuron " + std::to_string(n) + " has two connected synapses on one address");
    }
  }
}

}  // namespace

std::size_t checkpoint_size(const Area& area) {
  std::size_t size = kAreaHeaderBytes + area.num_neurons() * 4;
  for (const auto& f : area.forests()) size += 12 + f.synapse_count() * 5;
  return size;
}

void save_area(const Area& area, std::ostream& sink) {
  Writer w(sink);
  w.bytes(kAreaMagic, sizeof(kAreaMagic));
  w.u32(kAreaFormatVersion);
  w.u32(static_cast<std::uint32_t>(area.num_neurons()));
  w.u32(static_cast<std::uint32_t>(area.forest_count()));
  w.u32(area.neuron_threshold());
  w.u32(area.predict_threshold());
  for (const auto& f : area.forests()) {
    w.u32(f.synapses_per_dendrite());
    w.u32(f.stimuli_size());
    w.u32(f.dendrite_threshold());
    w.u32_array(f.addresses());
    w.bytes(f.permanences().data(), f.permanences().size());
  }
  w.u32_array(area.boosts());
  w.flush();
}

Area load_area(std::istream& source) {
  Reader r(source);
  char magic[4];
  r.bytes(magic, sizeof(magic), "magic");
  if (std::memcmp(magic, kAreaMagic, sizeof(magic)) != 0) {
    throw LoadError(LoadErrorKind::bad_magic, "not a Simple Cortex checkpoint (bad magic)");
  }
  const auto version = r.u32("version");
  if (version != kAreaFormatVersion) {
    throw LoadError(LoadErrorKind::unsupported_version, "unsupported checkpoint version " + std::to_string(version));
  }
  const auto num_neurons = r.u32("neuron count");
  const auto forest_count = r.u32("forest count");
  const auto neuron_threshold = r.u32("neuron threshold");
  const auto predict_threshold = r.u32("predict threshold");
  if (num_neurons == 0) throw invalid("checkpoint declares zero neurons");
  if (forest_count == 0) throw invalid("checkpoint declares zero forests");
  // Each forest carries at least a 12-byte shape record and 5 bytes per neuron.
  r.expect(static_cast<std::uint64_t>(forest_count) * (12 + 5ULL * num_neurons), "forests");

  std::vector<ForestPayload> payloads;
  payloads.reserve(std::min<std::uint32_t>(forest_count, 64));
  for (std::uint32_t i = 0; i < forest_count; ++i) {
    ForestPayload f;
    f.spec.synapses_per_dendrite = r.u32("synapses per dendrite");
    f.spec.stimuli_size = r.u32("stimuli size");
    f.spec.dendrite_threshold = r.u32("dendrite threshold");
    if (f.spec.synapses_per_dendrite == 0 || f.spec.stimuli_size == 0 ||
        f.spec.dendrite_threshold > f.spec.synapses_per_dendrite) {
      throw invalid("forest " + std::to_string(i) + " has an invalid shape");
    }
    const std::uint64_t count = static_cast<std::uint64_t>(num_neurons) * f.spec.synapses_per_dendrite;
    if (count > std::numeric_limits<std::size_t>::max() / 4) throw invalid("forest too large");
    r.expect(count * 5, "synapses");
    f.addresses = r.u32_array(static_cast<std::size_t>(count), "synapse addresses");
    f.permanences = r.u8_array(static_cast<std::size_t>(count), "synapse permanences");
    check_forest(i, num_neurons, f);
    payloads.push_back(std::move(f));
  }
  auto boosts = r.u32_array(num_neurons, "boosts");

  std::vector<ForestSpec> specs;
  for (const auto& f : payloads) specs.push_back(f.spec);
  std::optional<Area> area;
  try {
    area.emplace(num_neurons, std::move(specs), neuron_threshold, predict_threshold);
  } catch (const std::invalid_argument& e) {
    throw invalid(std::string("checkpoint describes an invalid area: ") + e.what());
  }
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    auto& forest = area->forest(i);
    std::copy(payloads[i].addresses.begin(), payloads[i].addresses.end(), forest.addresses().begin());
    std::copy(payloads[i].permanences.begin(), payloads[i].permanences.end(), forest.permanences().begin());
  }
  for (std::size_t n = 0; n < boosts.size(); ++n) {
    if (boosts[n] > area->boost_cap()) {
      throw invalid("neuron " + std::to_string(n) + " boost " + std::to_string(boosts[n]) + " above cap " +
                    std::to_string(area->boost_cap()));
    }
  }
  std::copy(boosts.begin(), boosts.end(), area->boosts().begin());
  return std::move(*area);
}

void save_area_file(const Area& area, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SaveError(0, "cannot open " + path.string() + " for writing");
  save_area(area, out);
}

Area load_area_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(LoadErrorKind::io, "cannot open checkpoint " + path.string());
  return load_area(in);
}

}  // namespace simple_cortex
