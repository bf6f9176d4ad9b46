//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/lifting.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "digicover/enumerate.h"
#include "digicover/harness.h"
#include "digicover/claim_suite.h"
#include "oracle.h"

namespace digicover {
namespace {

TEST(EnumerateLifts, IdentityLiftsUniquely) {
  auto c6 = share(gen_cycle(6));
  const auto id = identity_map(c6);
  const PointSeq base {0, 1, 2, 2, 1, 0, 5};
  const auto lifts = enumerate_lifts(id, base, 0);
  ASSERT_EQ(lifts.size(), 1u);
  EXPECT_EQ(lifts[0].lift, base);
  EXPECT_EQ(lifts[0].base_path, base);
  EXPECT_EQ(lifts[0].start, 0);
}

TEST(EnumerateLifts, DoublingMap) {
  const auto p = build_doubling_map(4);
  const auto lifts = enumerate_lifts(p, {0, 1}, 0);
  ASSERT_EQ(lifts.size(), 1u);
  EXPECT_EQ(lifts[0].lift, (PointSeq {0, 1}));
  EXPECT_FALSE(p.source().adjacent(0, 5));
}

TEST(EnumerateLifts, WindowMapWitnessHasNoLift) {
  const auto p = build_window_map(4, 3);
  EXPECT_TRUE(enumerate_lifts(p, {0, 3}, 0).empty());
  EXPECT_EQ(count_lifts(p, {0, 3}, 0), 0u);
}

TEST(EnumerateLifts, Errors) {
  const auto p = build_window_map(4, 3);
  EXPECT_THROW(enumerate_lifts(p, {0, 2}, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_lifts(p, {0, 1}, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_lifts(p, {}, 0), std::invalid_argument);
}

TEST(EnumerateLifts, StutteringLiftsMayMoveWithinAFiber) {
  // Two adjacent points over one base point: a stuttering base step lifts
  // to either.
  auto src = share(gen_interval(0, 1));
  auto tgt = share(DigitalImage(1, {{0}}, CuAdjacency {1}));
  const DigitalMap p(src, tgt, {0, 0});
  const auto lifts = enumerate_lifts(p, {0, 0}, 0);
  ASSERT_EQ(lifts.size(), 2u);
  EXPECT_EQ(lifts[0].lift, (PointSeq {0, 0}));
  EXPECT_EQ(lifts[1].lift, (PointSeq {0, 1}));
}

TEST(EnumerateLifts, AgreesWithSequenceOracle) {
  std::vector<DigitalMap> maps;
  HarnessOptions opts;
  opts.max_points = 4;
  opts.samples = 100;
  for_each_harness_map(opts, [&](const std::string &, const DigitalMap &m) {
    maps.push_back(m);
  });
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto a = share(random_graph_image(6, s));
    auto b = share(random_image(4, 2, s));
    maps.push_back(random_map(a, b, s));
  }
  std::size_t compared = 0;
  for (const auto &p: maps) {
    for (int steps = 0; steps <= 3; ++steps) {
      for (const auto &base: oracle::paths(p.target(), steps, true)) {
        for (int start: oracle::fiber(p, base[0])) {
          const auto want = oracle::lifts(p, base, start);
          const auto got = enumerate_lifts(p, base, start);
          ASSERT_EQ(got.size(), want.size());
          for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].lift, want[i]);
            EXPECT_EQ(got[i].base_path, base);
            EXPECT_EQ(got[i].start, start);
          }
          EXPECT_EQ(count_lifts(p, base, start), want.size());
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 10000u);
}

TEST(Ulp, Examples) {
  const auto id = check_unique_path_lifting(identity_map(share(gen_cycle(5))), 3);
  EXPECT_TRUE(id.holds());
  EXPECT_EQ(id.max_length_checked, 3);

  EXPECT_TRUE(check_unique_path_lifting(build_doubling_map(4), 8).holds());

  const auto w = check_unique_path_lifting(build_window_map(4, 3), 2);
  EXPECT_EQ(w.status, UlpStatus::kFails);
  ASSERT_TRUE(w.counterexample);
  EXPECT_EQ(w.counterexample->base_path, (PointSeq {0, 3}));
  EXPECT_EQ(w.counterexample->start, 0);
  EXPECT_EQ(w.counterexample->lift_count, 0u);
  EXPECT_TRUE(w.counterexample->lifts.empty());

  EXPECT_THROW(check_unique_path_lifting(build_doubling_map(4), 0),
               std::invalid_argument);
}

TEST(Ulp, BoundaryOnlyFailuresAreInconclusive) {
  // The doubling cover C_8 -> C_4 with a pendant point 8 hung on 7. Every
  // lifting failure breaks down at 7 or 8, and both are flagged.
  std::vector<Point> pts;
  ExplicitAdjacency edges;
  for (int i = 0; i < 9; ++i)
    pts.push_back({i});
  for (int i = 0; i < 8; ++i)
    edges.edges.push_back({i, (i + 1) % 8});
  edges.edges.push_back({7, 8});
  auto src = share(DigitalImage(1, pts, edges, {}, {7, 8}));
  const DigitalMap p(src, share(gen_cycle(4)), {0, 1, 2, 3, 0, 1, 2, 3, 0});
  const auto r = check_unique_path_lifting(p, 4);
  EXPECT_EQ(r.status, UlpStatus::kInconclusive);
  EXPECT_FALSE(r.holds());
  EXPECT_EQ(ulp_to_json(r)["holds"], "inconclusive");

  // Without the flags the same failure is reported outright.
  auto bare = share(DigitalImage(1, pts, edges));
  const DigitalMap q(bare, p.target_ptr(), p.assignment());
  EXPECT_EQ(check_unique_path_lifting(q, 4).status, UlpStatus::kFails);
}

TEST(Ulp, AgreesWithPathOracle) {
  HarnessOptions opts;
  opts.max_points = 3;
  opts.samples = 60;
  opts.sample_points = 4;
  std::size_t checked = 0;
  for_each_harness_map(opts, [&](const std::string &, const DigitalMap &p) {
    const int bound = 2 * std::max(p.source().size(), p.target().size());
    const auto r = check_unique_path_lifting(p, bound);
    ASSERT_NE(r.status, UlpStatus::kInconclusive);
    ASSERT_EQ(r.holds(), oracle::unique_path_lifting(p, bound))
        << map_to_json(p).dump();
    ++checked;
  });
  EXPECT_GT(checked, 50u);
}

TEST(Ulp, CounterexampleReplays) {
  HarnessOptions opts;
  opts.max_points = 4;
  for_each_harness_map(opts, [&](const std::string &, const DigitalMap &p) {
    const auto r = check_unique_path_lifting(p, 8);
    if (r.holds())
      return;
    ASSERT_TRUE(r.counterexample);
    const auto &cx = *r.counterexample;
    EXPECT_NE(cx.lift_count, 1u);
    EXPECT_EQ(oracle::count_lifts(p, cx.base_path, 1, cx.start),
              static_cast<long>(cx.lift_count));
    EXPECT_EQ(enumerate_lifts(p, cx.base_path, cx.start), cx.lifts);
  });
}

TEST(Ulp, MonotoneInBound) {
  HarnessOptions opts;
  opts.max_points = 4;
  for_each_harness_map(opts, [&](const std::string &, const DigitalMap &p) {
    bool failed = false;
    for (int L = 1; L <= 8; ++L) {
      const bool holds = check_unique_path_lifting(p, L).holds();
      if (failed)
        ASSERT_FALSE(holds);
      failed = failed || !holds;
    }
  });
}

TEST(Ulp, CoveringsLiftUniquely) {
  HarnessOptions opts;
  opts.max_points = 4;
  opts.samples = 200;
  std::size_t coverings = 0;
  for_each_harness_map(opts, [&](const std::string &, const DigitalMap &p) {
    if (!check_covering(p).holds)
      return;
    ++coverings;
    EXPECT_TRUE(check_unique_path_lifting(p, 2 * p.source().size()).holds());
  });
  EXPECT_GT(coverings, 10u);
}

TEST(Ulp, StutteringModeFindsFiberEdges) {
  auto src = share(gen_interval(0, 1));
  auto tgt = share(DigitalImage(1, {{0}}, CuAdjacency {1}));
  const DigitalMap p(src, tgt, {0, 0});
  // No non-stuttering path of positive length exists in a single point.
  EXPECT_TRUE(check_unique_path_lifting(p, 2).holds());
  EXPECT_FALSE(check_unique_path_lifting(p, 2, UlpOptions {true}).holds());
}

TEST(LiftJson, Shape) {
  const auto lifts = enumerate_lifts(build_doubling_map(4), {0, 1}, 4);
  ASSERT_EQ(lifts.size(), 1u);
  const auto j = lift_to_json(lifts[0]);
  EXPECT_EQ(j["base_path"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(j["lift"], nlohmann::json::array({4, 5}));
  EXPECT_EQ(j["start"], 4);

  const auto r = ulp_to_json(check_unique_path_lifting(build_window_map(4, 3), 2));
  EXPECT_EQ(r["holds"], false);
  EXPECT_EQ(r["max_length_checked"], 2);
  EXPECT_EQ(r["counterexample"]["lift_count"], 0);
}

} // namespace
} // namespace digicover
