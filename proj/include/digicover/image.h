//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_IMAGE_H_
#define DIGICOVER_IMAGE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace digicover {

/// Position of a point in the canonical (lexicographic) order of its image.
using PointIndex = int;

/// Sorted, duplicate-free list of point indices of one image.
using IndexSet = std::vector<PointIndex>;

/// A sequence of point indices of one image (a candidate path).
using PointSeq = std::vector<PointIndex>;

struct Point {
  std::vector<std::int64_t> coords;

  Point() = default;
  Point(std::initializer_list<std::int64_t> c): coords(c) { }
  explicit Point(std::vector<std::int64_t> c): coords(std::move(c)) { }

  int dim() const { return static_cast<int>(coords.size()); }

  friend auto operator<=>(const Point &, const Point &) = default;
};

std::string to_string(const Point &p);

/// c_u adjacency on Z^d: all coordinate differences lie in {-1, 0, 1} and
/// between 1 and u of them are nonzero.
struct CuAdjacency {
  int u = 1;

  friend bool operator==(const CuAdjacency &, const CuAdjacency &) = default;
};

/// Explicit undirected edges, as index pairs into the owning image's
/// point list. Canonical form: i < j, sorted, no duplicates.
struct ExplicitAdjacency {
  std::vector<std::pair<PointIndex, PointIndex>> edges;

  friend bool operator==(const ExplicitAdjacency &,
                         const ExplicitAdjacency &) = default;
};

using Adjacency = std::variant<CuAdjacency, ExplicitAdjacency>;

/// Throws std::invalid_argument on dimension mismatch or u outside [1, d].
bool cu_adjacent(const Point &x, const Point &y, int u);

/// A finite digital image: a nonempty point set in Z^d with an adjacency
/// relation. Immutable after construction.
///
/// The constructor sorts the points lexicographically; explicit edges,
/// labels and boundary tags given against the caller's order are remapped,
/// so two images built from the same data in any order are identical.
class DigitalImage {
public:
  DigitalImage(int dim, std::vector<Point> points, Adjacency adjacency,
               std::vector<std::string> labels = {}, IndexSet boundary = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }

  const std::vector<Point> &points() const { return points_; }
  const Point &point(PointIndex i) const { return points_[i]; }
  const Adjacency &adjacency() const { return adjacency_; }
  bool is_cu() const { return std::holds_alternative<CuAdjacency>(adjacency_); }

  std::optional<PointIndex> find(const Point &p) const;
  /// Throws std::out_of_range if p is not a point of the image.
  PointIndex index_of(const Point &p) const;

  bool adjacent(PointIndex i, PointIndex j) const;
  bool adjeq(PointIndex i, PointIndex j) const {
    return i == j || adjacent(i, j);
  }

  /// Strict neighbors, sorted.
  const IndexSet &neighbors(PointIndex i) const { return neighbors_[i]; }
  /// Neighbors plus the point itself, sorted.
  IndexSet closed_neighborhood(PointIndex i) const;

  /// Canonical undirected edge list (i < j, sorted).
  std::vector<std::pair<PointIndex, PointIndex>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// Generator label if present (e.g. "c3"), otherwise the coordinates.
  std::string label(PointIndex i) const;
  std::optional<PointIndex> find_label(std::string_view label) const;

  /// Points flagged as truncation artifacts of a finite window.
  const IndexSet &boundary() const { return boundary_; }
  bool is_boundary(PointIndex i) const;

  friend bool operator==(const DigitalImage &a, const DigitalImage &b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_
           && a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_
           && a.boundary_ == b.boundary_;
  }

private:
  int dim_;
  std::vector<Point> points_;
  Adjacency adjacency_;
  std::vector<std::string> labels_;
  IndexSet boundary_;
  std::vector<IndexSet> neighbors_;
};

// Point-level forms of the basic queries. All throw std::out_of_range for
// points outside the image.
bool adjacent(const DigitalImage &image, const Point &x, const Point &y);
std::vector<Point> neighbors_strict(const DigitalImage &image, const Point &x);
std::vector<Point> neighborhood_closed(const DigitalImage &image,
                                       const Point &x);

bool is_connected(const DigitalImage &image);
bool is_connected(const DigitalImage &image, const IndexSet &subset);

/// Consecutive entries equal or adjacent. Throws std::out_of_range if an
/// entry is not a point index of the image.
bool is_path(const DigitalImage &image, const PointSeq &seq);
bool is_path(const DigitalImage &image, const std::vector<Point> &seq);

/// Shortest path between two points by breadth-first search, empty when
/// they lie in different components.
PointSeq bfs_path(const DigitalImage &image, PointIndex from, PointIndex to);

/// At least 4 points that can be circularly ordered so that every point's
/// strict neighbors are exactly its two circular neighbors.
bool is_simple_closed_curve(const DigitalImage &image);

// Generators.

/// {a, ..., b} in Z with c_1 adjacency.
DigitalImage gen_interval(std::int64_t a, std::int64_t b);

/// c_0 ... c_{n-1} embedded as 0 ... n-1 in Z with explicit cyclic edges.
/// Requires n >= 4.
DigitalImage gen_cycle(int n);

/// The same curve realized as the perimeter of a 3 x (n/2 - 1) lattice
/// rectangle in Z^2 under c_1. Requires even n >= 8. Labels c_i run around
/// the perimeter, so the labeled graph is identical to gen_cycle(n).
DigitalImage gen_cycle_rect(int n);

/// Finite window [0, q*n] of the nonnegative integers, with q*n - 1 and q*n
/// tagged as boundary artifacts. Requires q >= 2, n >= 4.
DigitalImage gen_window(int q, int n);

// JSON file format:
//   { "dim": d, "points": [[...], ...],
//     "adjacency": {"cu": u} | {"edges": [[i, j], ...]},
//     "meta": {"labels": [...], "boundary": [...]} }   (meta optional)

/// Validates every invariant; throws std::invalid_argument naming the first
/// violation.
DigitalImage image_from_json(const nlohmann::json &j);
nlohmann::json image_to_json(const DigitalImage &image);

} // namespace digicover

#endif // DIGICOVER_IMAGE_H_
