//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/image.h"

#include <stdexcept>

#include <gtest/gtest.h>

#include "digicover/enumerate.h"

namespace digicover {
namespace {

std::vector<Point> pts(const DigitalImage &im, const std::vector<Point> &v) {
  (void) im;
  return v;
}

TEST(CuAdjacent, Basics) {
  EXPECT_TRUE(cu_adjacent({0, 0}, {1, 0}, 1));
  EXPECT_FALSE(cu_adjacent({0, 0}, {0, 0}, 2));
  EXPECT_FALSE(cu_adjacent({0, 0}, {1, 1}, 1));
  EXPECT_TRUE(cu_adjacent({0, 0}, {1, 1}, 2));
  EXPECT_FALSE(cu_adjacent({0}, {2}, 1));
}

TEST(CuAdjacent, OffsetSetsOfOrigin) {
  // 4- and 8-neighborhoods of the origin, listed by hand.
  const std::vector<Point> four {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const std::vector<Point> diag {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int x = -2; x <= 2; ++x) {
    for (int y = -2; y <= 2; ++y) {
      const Point p {x, y};
      const bool in4 = std::find(four.begin(), four.end(), p) != four.end();
      const bool in8 =
          in4 || std::find(diag.begin(), diag.end(), p) != diag.end();
      EXPECT_EQ(cu_adjacent({0, 0}, p, 1), in4) << to_string(p);
      EXPECT_EQ(cu_adjacent({0, 0}, p, 2), in8) << to_string(p);
    }
  }
}

TEST(CuAdjacent, Errors) {
  EXPECT_THROW(cu_adjacent({0}, {0, 1}, 1), std::invalid_argument);
  EXPECT_THROW(cu_adjacent({0, 0}, {0, 1}, 3), std::invalid_argument);
  EXPECT_THROW(cu_adjacent({0, 0}, {0, 1}, 0), std::invalid_argument);
}

TEST(CuAdjacent, NestingInU) {
  std::vector<Point> cube;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        cube.push_back({a, b, c});
  for (const auto &p: cube)
    for (int u = 1; u <= 3; ++u)
      for (int v = u; v <= 3; ++v)
        if (cu_adjacent({0, 0, 0}, p, u))
          EXPECT_TRUE(cu_adjacent({0, 0, 0}, p, v));
}

TEST(Image, AdjacentOnGenerators) {
  const auto c4 = gen_cycle(4);
  EXPECT_TRUE(adjacent(c4, {0}, {3}));
  EXPECT_FALSE(adjacent(c4, {0}, {2}));
  const auto i03 = gen_interval(0, 3);
  EXPECT_TRUE(adjacent(i03, {1}, {2}));
  EXPECT_THROW(adjacent(i03, {1}, {7}), std::out_of_range);
}

TEST(Image, Neighborhoods) {
  const auto i03 = gen_interval(0, 3);
  EXPECT_EQ(neighbors_strict(i03, {0}), pts(i03, {{1}}));
  EXPECT_EQ(neighbors_strict(i03, {1}), pts(i03, {{0}, {2}}));
  EXPECT_EQ(neighborhood_closed(i03, {0}), pts(i03, {{0}, {1}}));

  const auto c5 = gen_cycle(5);
  EXPECT_EQ(neighbors_strict(c5, {0}), pts(c5, {{1}, {4}}));
  EXPECT_EQ(neighborhood_closed(c5, {0}), pts(c5, {{0}, {1}, {4}}));
  EXPECT_EQ(neighbors_strict(c5, {4}), pts(c5, {{0}, {3}}));

  const DigitalImage single(2, {{3, 4}}, CuAdjacency {2});
  EXPECT_EQ(neighborhood_closed(single, {3, 4}), pts(single, {{3, 4}}));
}

TEST(Image, Connectivity) {
  EXPECT_TRUE(is_connected(gen_cycle(6)));
  EXPECT_FALSE(is_connected(DigitalImage(2, {{0, 0}, {5, 5}}, CuAdjacency {1})));
  EXPECT_TRUE(is_connected(DigitalImage(1, {{0}}, CuAdjacency {1})));
}

TEST(Image, Paths) {
  const auto i03 = gen_interval(0, 3);
  EXPECT_TRUE(is_path(i03, PointSeq {0, 1, 2}));
  EXPECT_TRUE(is_path(i03, PointSeq {0, 0, 1}));
  EXPECT_FALSE(is_path(i03, PointSeq {0, 2}));
  EXPECT_THROW(is_path(i03, PointSeq {0, 9}), std::out_of_range);
  EXPECT_TRUE(is_path(i03, std::vector<Point> {{3}, {2}}));
}

TEST(Image, BfsPathsArePaths) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto im = random_image(8, 1 + seed % 3, seed);
    for (int a = 0; a < im.size(); ++a) {
      for (int b = 0; b < im.size(); ++b) {
        const auto path = bfs_path(im, a, b);
        ASSERT_FALSE(path.empty());
        EXPECT_EQ(path.front(), a);
        EXPECT_EQ(path.back(), b);
        EXPECT_TRUE(is_path(im, path));
      }
    }
  }
}

TEST(Image, SimpleClosedCurves) {
  EXPECT_TRUE(is_simple_closed_curve(gen_cycle(6)));
  EXPECT_TRUE(is_simple_closed_curve(gen_cycle(8)));
  EXPECT_FALSE(is_simple_closed_curve(gen_interval(0, 5)));
  EXPECT_FALSE(is_simple_closed_curve(
      DigitalImage(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, CuAdjacency {2})));
  EXPECT_TRUE(is_simple_closed_curve(
      DigitalImage(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, CuAdjacency {1})));
  // Two disjoint 4-cycles are 2-regular but not one curve.
  EXPECT_FALSE(is_simple_closed_curve(
      DigitalImage(1, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}},
                   ExplicitAdjacency {{{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                       {4, 5}, {5, 6}, {6, 7}, {4, 7}}})));
}

TEST(Image, Generators) {
  EXPECT_EQ(gen_interval(0, 2).size(), 3);
  EXPECT_EQ(gen_interval(0, 0).size(), 1);
  const auto i12 = gen_interval(0, 12);
  EXPECT_EQ(i12.size(), 13);
  for (int i = 1; i < 12; ++i)
    EXPECT_EQ(i12.neighbors(i).size(), 2u);
  EXPECT_THROW(gen_interval(3, 2), std::invalid_argument);

  for (int n = 4; n <= 9; ++n) {
    const auto c = gen_cycle(n);
    EXPECT_EQ(c.size(), n);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(c.neighbors(i).size(), 2u);
      EXPECT_EQ(c.label(i), "c" + std::to_string(i));
    }
    EXPECT_TRUE(is_connected(c));
    EXPECT_TRUE(is_simple_closed_curve(c));
  }
  EXPECT_THROW(gen_cycle(3), std::invalid_argument);

  const auto w = gen_window(3, 4);
  EXPECT_EQ(w.size(), 13);
  EXPECT_EQ(w.boundary(), (IndexSet {11, 12}));
  EXPECT_FALSE(w.is_boundary(0));
  EXPECT_EQ(gen_window(2, 5).size(), 11);
  EXPECT_THROW(gen_window(1, 5), std::invalid_argument);
  EXPECT_THROW(gen_window(2, 3), std::invalid_argument);
}

TEST(Image, RectangleCurveMatchesAbstractCurve) {
  for (int n = 8; n <= 14; n += 2) {
    const auto rect = gen_cycle_rect(n);
    const auto abs = gen_cycle(n);
    ASSERT_EQ(rect.size(), n);
    EXPECT_TRUE(is_simple_closed_curve(rect));
    for (int i = 0; i < n; ++i) {
      const auto ri = *rect.find_label("c" + std::to_string(i));
      for (int j = 0; j < n; ++j) {
        const auto rj = *rect.find_label("c" + std::to_string(j));
        EXPECT_EQ(rect.adjacent(ri, rj), abs.adjacent(i, j));
      }
    }
  }
  EXPECT_THROW(gen_cycle_rect(7), std::invalid_argument);
  EXPECT_THROW(gen_cycle_rect(6), std::invalid_argument);
}

TEST(Image, AdjacencyLaws) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int dim = 1 + seed % 3;
    const auto im = seed % 4 == 0 ? random_graph_image(7, seed)
                                  : random_image(9, dim, seed);
    for (int x = 0; x < im.size(); ++x) {
      EXPECT_FALSE(im.adjacent(x, x));
      if (im.is_cu()) {
        int bound = 1;
        for (int k = 0; k < im.dim(); ++k)
          bound *= 3;
        EXPECT_LE(static_cast<int>(im.neighbors(x).size()), bound - 1);
      }
      for (int y = 0; y < im.size(); ++y)
        EXPECT_EQ(im.adjacent(x, y), im.adjacent(y, x));
    }
  }
}

TEST(Image, OneDimensionalC1IsTwoAdjacency) {
  const DigitalImage im(1, {{0}, {1}, {3}, {4}, {5}, {9}}, CuAdjacency {1});
  for (int i = 0; i < im.size(); ++i) {
    const auto z = im.point(i).coords[0];
    std::size_t expect = 0;
    expect += im.find({z - 1}).has_value();
    expect += im.find({z + 1}).has_value();
    EXPECT_EQ(im.neighbors(i).size(), expect);
  }
}

TEST(Image, ConstructorCanonicalizesAndValidates) {
  const DigitalImage a(1, {{2}, {0}, {1}}, ExplicitAdjacency {{{0, 1}, {1, 2}}},
                       {"two", "zero", "one"});
  const DigitalImage b(1, {{0}, {1}, {2}}, ExplicitAdjacency {{{2, 0}, {0, 1}}},
                       {"zero", "one", "two"});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.label(0), "zero");
  EXPECT_TRUE(a.adjacent(0, 2));

  EXPECT_THROW(DigitalImage(1, {{0}, {0}}, CuAdjacency {1}),
               std::invalid_argument);
  EXPECT_THROW(DigitalImage(1, {}, CuAdjacency {1}), std::invalid_argument);
  EXPECT_THROW(DigitalImage(2, {{0}}, CuAdjacency {1}), std::invalid_argument);
  EXPECT_THROW(DigitalImage(1, {{0}, {1}}, CuAdjacency {2}),
               std::invalid_argument);
  EXPECT_THROW(DigitalImage(1, {{0}, {1}}, ExplicitAdjacency {{{0, 0}}}),
               std::invalid_argument);
  EXPECT_THROW(DigitalImage(1, {{0}, {1}}, ExplicitAdjacency {{{0, 2}}}),
               std::invalid_argument);
  EXPECT_THROW(DigitalImage(1, {{0}, {1}}, ExplicitAdjacency {{{0, 1}, {1, 0}}}),
               std::invalid_argument);
}

TEST(ImageJson, RoundTrip) {
  for (const auto &im: {gen_cycle(5), gen_window(2, 4), gen_cycle_rect(8),
                        random_image(6, 3, 7), random_graph_image(6, 3)}) {
    const auto j = image_to_json(im);
    EXPECT_EQ(image_from_json(j), im);
    EXPECT_EQ(image_to_json(image_from_json(j)).dump(), j.dump());
  }
}

TEST(ImageJson, RejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(image_from_json(json::parse(R"({"dim":1,"points":[[0],[0]],
      "adjacency":{"cu":1}})")),
               std::invalid_argument);
  EXPECT_THROW(image_from_json(json::parse(R"({"dim":1,"points":[[0],[1]],
      "adjacency":{"edges":[[0,5]]}})")),
               std::invalid_argument);
  EXPECT_THROW(image_from_json(json::parse(R"({"dim":2,"points":[[0]],
      "adjacency":{"cu":1}})")),
               std::invalid_argument);
  EXPECT_THROW(image_from_json(json::parse(R"({"points":[[0]]})")),
               std::invalid_argument);
  EXPECT_THROW(image_from_json(json::parse(R"([1,2])")), std::invalid_argument);
}

} // namespace
} // namespace digicover
