#include <gtest/gtest.h>

#include <cmath>

#include "simple_cortex/ball_env.hpp"

namespace sc = simple_cortex;

TEST(Lcg, KnownSequence) {
  // state1 = 0 * a + c; output is its high word.
  sc::Lcg64 rng(0);
  EXPECT_EQ(rng.next_u32(), static_cast<std::uint32_t>(sc::Lcg64::kIncrement >> 32));
  const std::uint64_t s2 = sc::Lcg64::kIncrement * sc::Lcg64::kMultiplier + sc::Lcg64::kIncrement;
  EXPECT_EQ(rng.next_u32(), static_cast<std::uint32_t>(s2 >> 32));
  EXPECT_EQ(rng.state(), s2);
}

TEST(Lcg, UnitIntervalHalfOpen) {
  sc::Lcg64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(BallEnv, CenteredDiskHas49Pixels) {
  sc::BallEnv env(1);
  env.set_state(50, 50, 0, 0);
  const auto f = env.frame();
  EXPECT_EQ(f.count(), sc::BallEnv::kBallPixels);
  EXPECT_TRUE(f.test(50 * 100 + 50));
  EXPECT_TRUE(f.test(46 * 100 + 50));
  EXPECT_TRUE(f.test(50 * 100 + 54));
  EXPECT_FALSE(f.test(46 * 100 + 51));
  EXPECT_FALSE(f.test(54 * 100 + 54));
}

TEST(BallEnv, EveryInteriorFrameHas49Pixels) {
  sc::BallEnv env(9);
  for (int i = 0; i < 2000; ++i) {
    env.step();
    ASSERT_EQ(env.frame().count(), sc::BallEnv::kBallPixels) << "step " << i;
  }
}

TEST(BallEnv, SameSeedSameTrajectory) {
  sc::BallEnv a(7);
  sc::BallEnv b(7);
  for (int i = 0; i < 500; ++i) {
    a.step();
    b.step();
    ASSERT_EQ(a.frame(), b.frame());
  }
  EXPECT_EQ(a.rng_state(), b.rng_state());
}

TEST(BallEnv, AdjacentSeedsDiffer) {
  sc::BallEnv a(7);
  sc::BallEnv b(8);
  EXPECT_NE(a.frame(), b.frame());
}

TEST(BallEnv, SpawnWithinLimits) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    sc::BallEnv env(seed);
    ASSERT_GE(env.x(), env.min_coord());
    ASSERT_LE(env.x(), env.max_x());
    ASSERT_GE(env.y(), env.min_coord());
    ASSERT_LE(env.y(), env.max_y());
    ASSERT_LE(std::abs(env.vx()), 2.0);
    ASSERT_LE(std::abs(env.vy()), 1.0);
  }
}

TEST(BallEnv, FreeFallGainsGravityPerStep) {
  sc::BallEnv env(1);
  env.set_state(50, 10, 0.5, 0);
  for (int i = 1; i <= 5; ++i) {
    const double y0 = env.y();
    env.step();
    EXPECT_NEAR(env.vy(), 0.2 * i, 1e-12);
    EXPECT_NEAR(env.y(), y0 + 0.2 * i, 1e-12);
  }
  EXPECT_DOUBLE_EQ(env.vx(), 0.5);
}

TEST(BallEnv, GroundBounceKeepsRestitutionOfSpeed) {
  sc::BallEnv env(1);
  const double hi = env.max_y();
  // After gravity the ball moves 3.0 and crosses the floor by 1.0.
  env.set_state(50, hi - 2.0, 0, 2.8);
  env.step();
  EXPECT_DOUBLE_EQ(env.vy(), -0.8 * 3.0);
  EXPECT_LE(env.y(), hi);
}

TEST(BallEnv, WallBounceReflectsHorizontalVelocity) {
  sc::BallEnv env(1);
  env.set_state(env.max_x() - 0.5, 50, 1.5, 0);
  env.step();
  EXPECT_DOUBLE_EQ(env.vx(), -1.5 * 0.8);
  EXPECT_DOUBLE_EQ(env.x(), env.max_x() - 1.0);
}

TEST(BallEnv, RestIsAFixedPoint) {
  sc::BallEnv env(1);
  env.set_state(30, env.max_y(), 0, 0);
  for (int i = 0; i < 50; ++i) {
    env.step();
    ASSERT_DOUBLE_EQ(env.y(), env.max_y());
    ASSERT_DOUBLE_EQ(env.vy(), 0.0);
    ASSERT_DOUBLE_EQ(env.x(), 30.0);
  }
}

TEST(BallEnv, EnergyNeverIncreasesAndStaysInBounds) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    sc::BallEnv env(seed);
    double e = env.energy();
    for (int i = 0; i < 3000; ++i) {
      env.step();
      ASSERT_LE(env.energy(), e + 1e-9) << "seed " << seed << " step " << i;
      e = env.energy();
      ASSERT_GE(env.x(), env.min_coord());
      ASSERT_LE(env.x(), env.max_x());
      ASSERT_GE(env.y(), env.min_coord());
      ASSERT_LE(env.y(), env.max_y());
    }
  }
}

TEST(BallEnv, EventuallySettles) {
  sc::BallEnv env(3);
  for (int i = 0; i < 20000; ++i) env.step();
  EXPECT_DOUBLE_EQ(env.y(), env.max_y());
  EXPECT_DOUBLE_EQ(env.vy(), 0.0);
}

TEST(BallEnv, RejectsBadConfiguration) {
  sc::BallPhysics p;
  p.width = 5;
  EXPECT_THROW(sc::BallEnv(1, p), std::invalid_argument);
  p = {};
  p.restitution = 0.0;
  EXPECT_THROW(sc::BallEnv(1, p), std::invalid_argument);
  p = {};
  p.gravity = -1;
  EXPECT_THROW(sc::BallEnv(1, p), std::invalid_argument);
  sc::BallEnv env(1);
  EXPECT_THROW(env.set_state(1, 50, 0, 0), std::invalid_argument);
  sc::StimuliVector wrong(10);
  EXPECT_THROW(env.render(wrong), std::invalid_argument);
}

TEST(BallEnv, NonSquareSceneUsesRowMajorPixels) {
  sc::BallPhysics p;
  p.width = 30;
  p.height = 20;
  sc::BallEnv env(1, p);
  env.set_state(10, 12, 0, 0);
  const auto f = env.frame();
  EXPECT_EQ(f.size(), 600u);
  EXPECT_TRUE(f.test(12 * 30 + 10));
  EXPECT_EQ(f.count(), 49u);
}
