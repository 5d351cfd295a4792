#pragma once

#include <cstddef>
#include <cstdint>

#include "simple_cortex/stimuli.hpp"

namespace simple_cortex {

// 64-bit linear congruential generator. The output is the top 32 bits of the
// advanced state, which makes the stream reproducible in any language.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint32_t next_u32() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  // Uniform in [0, 1).
  double next_unit() noexcept { return static_cast<double>(next_u32()) / 4294967296.0; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_unit(); }

  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

struct BallPhysics {
  int width = 100;
  int height = 100;
  double gravity = 0.2;        // px / step^2, toward larger y
  double restitution = 0.8;    // normal speed kept per bounce
  double max_spawn_vx = 2.0;   // vx drawn from [-max, max]
  double max_spawn_vy = 1.0;   // vy drawn from [-max, max]
  double rest_speed = 0.05;    // below this on the ground the ball settles
};

// A ball bouncing inside a box. Pixel rows grow downward, so gravity pushes y
// up toward the ground at y = height - 1 - radius. Position and velocity are
// continuous; only render() snaps to the pixel grid.
class BallEnv {
 public:
  static constexpr int kRadius = 4;
  // Lattice points with dx^2 + dy^2 <= kRadius^2.
  static constexpr std::size_t kBallPixels = 49;

  explicit BallEnv(std::uint64_t seed, const BallPhysics& physics = {});

  // Gravity, move, then reflect off any crossed wall with restitution.
  void step();
  // Draws a fresh position and velocity from the generator.
  void respawn();

  // Sets the ball disk in `out`, which must hold width * height stimuli,
  // clearing everything else. Pixel (px, py) is stimulus py * width + px.
  void render(StimuliVector& out) const;
  StimuliVector frame() const;

  // Mechanical energy 0.5 |v|^2 + gravity * (height above the ground).
  double energy() const noexcept;

  void set_state(double x, double y, double vx, double vy);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double vx() const noexcept { return vx_; }
  double vy() const noexcept { return vy_; }
  const BallPhysics& physics() const noexcept { return physics_; }
  int width() const noexcept { return physics_.width; }
  int height() const noexcept { return physics_.height; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(physics_.width) * static_cast<std::size_t>(physics_.height);
  }
  double min_coord() const noexcept { return kRadius; }
  double max_x() const noexcept { return physics_.width - 1 - kRadius; }
  double max_y() const noexcept { return physics_.height - 1 - kRadius; }
  std::uint64_t rng_state() const noexcept { return rng_.state(); }

 private:
  BallPhysics physics_;
  Lcg64 rng_;
  double x_ = 0.0;
  double y_ = 0.0;
  double vx_ = 0.0;
  double vy_ = 0.0;
};

}  // namespace simple_cortex
