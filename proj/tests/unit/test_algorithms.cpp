#include <gtest/gtest.h>

#include "simple_cortex/algorithms.hpp"
#include "support/trace_cases.hpp"

namespace sc = simple_cortex;

class TraceCaseTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(TraceCaseTest, MatchesHandTrace) {
  const auto& c = sc::testing::trace_cases().at(GetParam());
  const auto failure = c.run();
  EXPECT_FALSE(failure.has_value()) << c.name << ": " << failure.value_or("");
}

INSTANTIATE_TEST_SUITE_P(Traces, TraceCaseTest,
                         ::testing::Range<std::size_t>(0, sc::testing::trace_cases().size()),
                         [](const ::testing::TestParamInfo<std::size_t>& info) {
                           return sc::testing::trace_cases().at(info.param).name;
                         });

TEST(Bindings, RejectBadForestIndex) {
  sc::Area area(2, {{1, 4, 1}});
  sc::StimuliVector s(4);
  EXPECT_THROW(sc::encode(area, {sc::Binding{1, s}}), std::invalid_argument);
}

TEST(Bindings, RejectDuplicateForest) {
  sc::Area area(2, {{1, 4, 1}});
  sc::StimuliVector s(4);
  EXPECT_THROW(sc::learn(area, {sc::Binding{0, s}, sc::Binding{0, s}}), std::invalid_argument);
}

TEST(Bindings, RejectSizeMismatch) {
  sc::Area area(2, {{1, 4, 1}});
  sc::StimuliVector s(5);
  EXPECT_THROW(sc::predict(area, {sc::Binding{0, s}}), std::invalid_argument);
}

TEST(Bindings, DecodeOutputSizeChecked) {
  sc::Area area(2, {{1, 4, 1}});
  sc::StimuliVector out(3);
  EXPECT_THROW(sc::decode(area, 0, out), std::invalid_argument);
  EXPECT_THROW(sc::decode(area, 1, out), std::invalid_argument);
}

TEST(Bindings, ForecastNeedsStateContextForest) {
  sc::Area area(2, {{1, 4, 1}, {1, 3, 1}});
  EXPECT_THROW(sc::forecast(area, 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(sc::forecast(area, 2, 0, 1), std::invalid_argument);
}

TEST(Bindings, UnboundForestsDoNotLearn) {
  sc::Area area(1, {{1, 2, 1}, {1, 2, 1}});
  const auto s = sc::StimuliVector::from_string("01");
  sc::encode(area, {sc::Binding{0, s}});
  sc::learn(area, {sc::Binding{0, s}});
  EXPECT_EQ(area.forest(0).permanences()[0], 1);
  EXPECT_EQ(area.forest(1).permanences()[0], 0);
}

TEST(Forecast, ZeroStepsIsEmpty) {
  sc::Area area(2, {{1, 4, 1}, {1, 2, 1}});
  EXPECT_TRUE(sc::forecast(area, 1, 0, 0).empty());
}

TEST(Encode, ResultReportsPath) {
  sc::Area area(3, {{2, 4, 1}});
  const auto s = sc::StimuliVector::from_string("1100");
  auto r = sc::encode(area, {sc::Binding{0, s}});
  EXPECT_FALSE(r.inhibited);
  EXPECT_EQ(r.boost_winner, std::optional<std::size_t>(0));
  EXPECT_EQ(r.active_count, 1u);
  sc::learn(area, {sc::Binding{0, s}});
  r = sc::encode(area, {sc::Binding{0, s}});
  EXPECT_TRUE(r.inhibited);
  EXPECT_FALSE(r.boost_winner.has_value());
  EXPECT_EQ(r.active_count, 1u);
}
