#include "simple_cortex/ball_env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace simple_cortex {

BallEnv::BallEnv(std::uint64_t seed, const BallPhysics& physics) : physics_(physics), rng_(seed) {
  constexpr int min_side = 2 * kRadius + 2;
  if (physics.width < min_side || physics.height < min_side) {
    throw std::invalid_argument("ball environment must be at least " + std::to_string(min_side) + " pixels per side");
  }
  if (physics.gravity < 0.0) throw std::invalid_argument("gravity must be non-negative");
  if (!(physics.restitution > 0.0 && physics.restitution <= 1.0)) {
    throw std::invalid_argument("restitution must be in (0, 1]");
  }
  if (physics.max_spawn_vx < 0.0 || physics.max_spawn_vy < 0.0 || physics.rest_speed < 0.0) {
    throw std::invalid_argument("speed limits must be non-negative");
  }
  respawn();
}

void BallEnv::respawn() {
  x_ = rng_.uniform(min_coord(), max_x());
  y_ = rng_.uniform(min_coord(), max_y());
  vx_ = rng_.uniform(-physics_.max_spawn_vx, physics_.max_spawn_vx);
  vy_ = rng_.uniform(-physics_.max_spawn_vy, physics_.max_spawn_vy);
}

void BallEnv::set_state(double x, double y, double vx, double vy) {
  if (x < min_coord() || x > max_x() || y < min_coord() || y > max_y()) {
    throw std::invalid_argument("ball center outside the legal interior");
  }
  x_ = x;
  y_ = y;
  vx_ = vx;
  vy_ = vy;
}

double BallEnv::energy() const noexcept {
  return 0.5 * (vx_ * vx_ + vy_ * vy_) + physics_.gravity * (max_y() - y_);
}

void BallEnv::step() {
  const double lo = min_coord();
  const double hi_x = max_x();
  const double hi_y = max_y();
  const double r = physics_.restitution;
  const double energy_before = energy();

  const bool resting = y_ == hi_y && std::abs(vy_) < physics_.rest_speed;
  if (resting) {
    vy_ = 0.0;
  } else {
    vy_ += physics_.gravity;
  }
  x_ += vx_;
  y_ += vy_;

  if (x_ < lo) {
    x_ = 2.0 * lo - x_;
    vx_ = -vx_ * r;
  } else if (x_ > hi_x) {
    x_ = 2.0 * hi_x - x_;
    vx_ = -vx_ * r;
  }
  x_ = std::clamp(x_, lo, hi_x);

  if (y_ < lo) {
    y_ = 2.0 * lo - y_;
    vy_ = -vy_ * r;
  } else if (y_ > hi_y) {
    y_ = 2.0 * hi_y - y_;
    vy_ = -vy_ * r;
    // Mirroring lifts the ball above where it struck; when that would add
    // energy, settle it on the ground with whatever upward speed is left.
    if (energy() > energy_before) {
      y_ = hi_y;
      const double budget = std::max(0.0, 2.0 * (energy_before - 0.5 * vx_ * vx_));
      vy_ = -std::min(std::abs(vy_), std::sqrt(budget));
    }
    if (y_ == hi_y && std::abs(vy_) < physics_.rest_speed) vy_ = 0.0;
  }
  y_ = std::clamp(y_, lo, hi_y);
}

void BallEnv::render(StimuliVector& out) const {
  if (out.size() != pixel_count()) {
    throw std::invalid_argument("frame buffer has " + std::to_string(out.size()) + " stimuli, environment needs " +
                                std::to_string(pixel_count()));
  }
  out.clear();
  const long cx = std::lround(x_);
  const long cy = std::lround(y_);
  const long w = physics_.width;
  const long h = physics_.height;
  for (long dy = -kRadius; dy <= kRadius; ++dy) {
    for (long dx = -kRadius; dx <= kRadius; ++dx) {
      if (dx * dx + dy * dy > kRadius * kRadius) continue;
      const long px = cx + dx;
      const long py = cy + dy;
      if (px < 0 || py < 0 || px >= w || py >= h) continue;
      out.set(static_cast<std::size_t>(py * w + px));
    }
  }
}

StimuliVector BallEnv::frame() const {
  StimuliVector out(pixel_count());
  render(out);
  return out;
}

}  // namespace simple_cortex
