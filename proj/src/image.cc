//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/image.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace digicover {

std::string to_string(const Point &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(p.coords[i]);
  }
  s += ')';
  return s;
}

bool cu_adjacent(const Point &x, const Point &y, int u) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("cu_adjacent: dimension mismatch");
  if (u < 1 || u > x.dim())
    throw std::invalid_argument("cu_adjacent: u must lie in [1, d]");

  int differing = 0;
  for (int i = 0; i < x.dim(); ++i) {
    const std::int64_t d = x.coords[i] - y.coords[i];
    if (d == 0)
      continue;
    if (d != 1 && d != -1)
      return false;
    ++differing;
  }
  return differing >= 1 && differing <= u;
}

namespace {

std::vector<IndexSet>
build_neighbors(const std::vector<Point> &points, const Adjacency &adjacency) {
  const int n = static_cast<int>(points.size());
  std::vector<IndexSet> nbrs(n);

  if (const auto *cu = std::get_if<CuAdjacency>(&adjacency)) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (cu_adjacent(points[i], points[j], cu->u)) {
          nbrs[i].push_back(j);
          nbrs[j].push_back(i);
        }
      }
    }
  } else {
    for (auto [i, j]: std::get<ExplicitAdjacency>(adjacency).edges) {
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
    }
  }

  for (auto &v: nbrs)
    std::sort(v.begin(), v.end());
  return nbrs;
}

} // namespace

DigitalImage::DigitalImage(int dim, std::vector<Point> points,
                           Adjacency adjacency,
                           std::vector<std::string> labels, IndexSet boundary)
    : dim_(dim) {
  if (dim < 1)
    throw std::invalid_argument("image dimension must be at least 1");
  if (points.empty())
    throw std::invalid_argument("image must have at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim) {
      throw std::invalid_argument("points[" + std::to_string(i)
                                  + "]: expected dimension "
                                  + std::to_string(dim));
    }
  }
  if (!labels.empty() && labels.size() != points.size())
    throw std::invalid_argument("label count does not match point count");

  const int n = static_cast<int>(points.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return points[a] < points[b]; });
  for (int k = 1; k < n; ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw std::invalid_argument("points[" + std::to_string(order[k])
                                  + "]: duplicate point "
                                  + to_string(points[order[k]]));
    }
  }

  std::vector<int> rank(n);
  for (int k = 0; k < n; ++k)
    rank[order[k]] = k;

  points_.reserve(n);
  for (int k = 0; k < n; ++k)
    points_.push_back(std::move(points[order[k]]));
  if (!labels.empty()) {
    labels_.reserve(n);
    for (int k = 0; k < n; ++k)
      labels_.push_back(std::move(labels[order[k]]));
  }

  for (PointIndex b: boundary) {
    if (b < 0 || b >= n)
      throw std::invalid_argument("boundary tag out of range");
    boundary_.push_back(rank[b]);
  }
  std::sort(boundary_.begin(), boundary_.end());
  boundary_.erase(std::unique(boundary_.begin(), boundary_.end()),
                  boundary_.end());

  if (auto *cu = std::get_if<CuAdjacency>(&adjacency)) {
    if (cu->u < 1 || cu->u > dim)
      throw std::invalid_argument("c_u adjacency requires 1 <= u <= dim");
    adjacency_ = *cu;
  } else {
    ExplicitAdjacency canon;
    const auto &edges = std::get<ExplicitAdjacency>(adjacency).edges;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [i, j] = edges[e];
      const std::string where = "edges[" + std::to_string(e) + "]: ";
      if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument(where + "endpoint index out of range");
      if (i == j)
        throw std::invalid_argument(where + "self-adjacency");
      int a = rank[i], b = rank[j];
      if (a > b)
        std::swap(a, b);
      canon.edges.emplace_back(a, b);
    }
    std::sort(canon.edges.begin(), canon.edges.end());
    auto dup = std::adjacent_find(canon.edges.begin(), canon.edges.end());
    if (dup != canon.edges.end()) {
      throw std::invalid_argument("duplicate edge between "
                                  + to_string(points_[dup->first]) + " and "
                                  + to_string(points_[dup->second]));
    }
    adjacency_ = std::move(canon);
  }

  neighbors_ = build_neighbors(points_, adjacency_);
}

std::optional<PointIndex> DigitalImage::find(const Point &p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p)
    return std::nullopt;
  return static_cast<PointIndex>(it - points_.begin());
}

PointIndex DigitalImage::index_of(const Point &p) const {
  auto i = find(p);
  if (!i)
    throw std::out_of_range("point " + to_string(p) + " is not in the image");
  return *i;
}

bool DigitalImage::adjacent(PointIndex i, PointIndex j) const {
  const auto &n = neighbors_[i];
  return std::binary_search(n.begin(), n.end(), j);
}

IndexSet DigitalImage::closed_neighborhood(PointIndex i) const {
  IndexSet s = neighbors_[i];
  s.insert(std::lower_bound(s.begin(), s.end(), i), i);
  return s;
}

std::vector<std::pair<PointIndex, PointIndex>> DigitalImage::edges() const {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex i = 0; i < size(); ++i) {
    for (PointIndex j: neighbors_[i]) {
      if (i < j)
        out.emplace_back(i, j);
    }
  }
  return out;
}

std::string DigitalImage::label(PointIndex i) const {
  if (!labels_.empty())
    return labels_[i];
  if (dim_ == 1)
    return std::to_string(points_[i].coords[0]);
  return to_string(points_[i]);
}

std::optional<PointIndex> DigitalImage::find_label(std::string_view l) const {
  for (PointIndex i = 0; i < size(); ++i) {
    if (label(i) == l)
      return i;
  }
  return std::nullopt;
}

bool DigitalImage::is_boundary(PointIndex i) const {
  return std::binary_search(boundary_.begin(), boundary_.end(), i);
}

bool adjacent(const DigitalImage &image, const Point &x, const Point &y) {
  return image.adjacent(image.index_of(x), image.index_of(y));
}

std::vector<Point> neighbors_strict(const DigitalImage &image,
                                    const Point &x) {
  std::vector<Point> out;
  for (PointIndex j: image.neighbors(image.index_of(x)))
    out.push_back(image.point(j));
  return out;
}

std::vector<Point> neighborhood_closed(const DigitalImage &image,
                                       const Point &x) {
  std::vector<Point> out;
  for (PointIndex j: image.closed_neighborhood(image.index_of(x)))
    out.push_back(image.point(j));
  return out;
}

bool is_connected(const DigitalImage &image, const IndexSet &subset) {
  if (subset.empty())
    return true;
  std::vector<char> in(image.size(), 0), seen(image.size(), 0);
  for (PointIndex i: subset)
    in[i] = 1;

  std::deque<PointIndex> queue {subset.front()};
  seen[subset.front()] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    PointIndex v = queue.front();
    queue.pop_front();
    for (PointIndex w: image.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == subset.size();
}

bool is_connected(const DigitalImage &image) {
  IndexSet all(image.size());
  std::iota(all.begin(), all.end(), 0);
  return is_connected(image, all);
}

bool is_path(const DigitalImage &image, const PointSeq &seq) {
  for (PointIndex i: seq) {
    if (i < 0 || i >= image.size())
      throw std::out_of_range("path entry " + std::to_string(i)
                              + " is not a point index of the image");
  }
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (!image.adjeq(seq[k - 1], seq[k]))
      return false;
  }
  return true;
}

bool is_path(const DigitalImage &image, const std::vector<Point> &seq) {
  PointSeq idx;
  idx.reserve(seq.size());
  for (const auto &p: seq)
    idx.push_back(image.index_of(p));
  return is_path(image, idx);
}

PointSeq bfs_path(const DigitalImage &image, PointIndex from, PointIndex to) {
  std::vector<PointIndex> parent(image.size(), -1);
  std::deque<PointIndex> queue {from};
  parent[from] = from;
  while (!queue.empty()) {
    PointIndex v = queue.front();
    queue.pop_front();
    if (v == to)
      break;
    for (PointIndex w: image.neighbors(v)) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] < 0)
    return {};
  PointSeq path {to};
  while (path.back() != from)
    path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_simple_closed_curve(const DigitalImage &image) {
  // A connected graph in which every vertex has degree two is a single
  // cycle, and walking it gives the required circular order.
  if (image.size() < 4)
    return false;
  for (PointIndex i = 0; i < image.size(); ++i) {
    if (image.neighbors(i).size() != 2)
      return false;
  }
  return is_connected(image);
}

DigitalImage gen_interval(std::int64_t a, std::int64_t b) {
  if (a > b)
    throw std::invalid_argument("gen_interval: requires a <= b");
  std::vector<Point> pts;
  for (std::int64_t z = a; z <= b; ++z)
    pts.push_back(Point {z});
  return DigitalImage(1, std::move(pts), CuAdjacency {1});
}

DigitalImage gen_cycle(int n) {
  if (n < 4)
    throw std::invalid_argument("gen_cycle: requires n >= 4");
  std::vector<Point> pts;
  std::vector<std::string> labels;
  ExplicitAdjacency adj;
  for (int i = 0; i < n; ++i) {
    pts.push_back(Point {i});
    labels.push_back("c" + std::to_string(i));
    adj.edges.emplace_back(i, (i + 1) % n);
  }
  return DigitalImage(1, std::move(pts), std::move(adj), std::move(labels));
}

DigitalImage gen_cycle_rect(int n) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("gen_cycle_rect: requires even n >= 8");
  const std::int64_t height = n / 2 - 1;
  std::vector<Point> pts;
  for (std::int64_t x = 0; x <= 2; ++x)
    pts.push_back(Point {x, 0});
  for (std::int64_t y = 1; y < height; ++y)
    pts.push_back(Point {2, y});
  for (std::int64_t x = 1; x >= 0; --x)
    pts.push_back(Point {x, height - 1});
  for (std::int64_t y = height - 2; y >= 1; --y)
    pts.push_back(Point {0, y});

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("c" + std::to_string(i));
  return DigitalImage(2, std::move(pts), CuAdjacency {1}, std::move(labels));
}

DigitalImage gen_window(int q, int n) {
  if (q < 2 || n < 4)
    throw std::invalid_argument("gen_window: requires q >= 2 and n >= 4");
  const std::int64_t cut = static_cast<std::int64_t>(q) * n;
  std::vector<Point> pts;
  for (std::int64_t z = 0; z <= cut; ++z)
    pts.push_back(Point {z});
  const auto last = static_cast<PointIndex>(cut);
  return DigitalImage(1, std::move(pts), CuAdjacency {1}, {},
                      {last - 1, last});
}

DigitalImage image_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw std::invalid_argument("image: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("image: missing integer field \"dim\"");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("image: missing array field \"points\"");
  if (!j.contains("adjacency") || !j["adjacency"].is_object())
    throw std::invalid_argument("image: missing object field \"adjacency\"");

  const int dim = j["dim"].get<int>();
  std::vector<Point> pts;
  const auto &jp = j["points"];
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!jp[i].is_array())
      throw std::invalid_argument(where + ": expected an array of integers");
    Point p;
    for (const auto &c: jp[i]) {
      if (!c.is_number_integer())
        throw std::invalid_argument(where + ": non-integer coordinate");
      p.coords.push_back(c.get<std::int64_t>());
    }
    pts.push_back(std::move(p));
  }

  Adjacency adjacency;
  const auto &ja = j["adjacency"];
  if (ja.contains("cu")) {
    if (!ja["cu"].is_number_integer())
      throw std::invalid_argument("adjacency.cu: expected an integer");
    adjacency = CuAdjacency {ja["cu"].get<int>()};
  } else if (ja.contains("edges") && ja["edges"].is_array()) {
    ExplicitAdjacency ex;
    const auto &je = ja["edges"];
    for (std::size_t e = 0; e < je.size(); ++e) {
      if (!je[e].is_array() || je[e].size() != 2 || !je[e][0].is_number_integer()
          || !je[e][1].is_number_integer()) {
        throw std::invalid_argument("adjacency.edges[" + std::to_string(e)
                                    + "]: expected a pair of indices");
      }
      ex.edges.emplace_back(je[e][0].get<int>(), je[e][1].get<int>());
    }
    adjacency = std::move(ex);
  } else {
    throw std::invalid_argument(
        "adjacency: expected {\"cu\": u} or {\"edges\": [...]}");
  }

  std::vector<std::string> labels;
  IndexSet boundary;
  if (j.contains("meta")) {
    const auto &meta = j["meta"];
    if (meta.contains("labels")) {
      for (const auto &l: meta["labels"]) {
        if (!l.is_string())
          throw std::invalid_argument("meta.labels: expected strings");
        labels.push_back(l.get<std::string>());
      }
    }
    if (meta.contains("boundary")) {
      for (const auto &b: meta["boundary"]) {
        if (!b.is_number_integer())
          throw std::invalid_argument("meta.boundary: expected indices");
        boundary.push_back(b.get<int>());
      }
    }
  }

  return DigitalImage(dim, std::move(pts), std::move(adjacency),
                      std::move(labels), std::move(boundary));
}

nlohmann::json image_to_json(const DigitalImage &image) {
  nlohmann::json j;
  j["dim"] = image.dim();
  auto &pts = j["points"] = nlohmann::json::array();
  for (const auto &p: image.points())
    pts.push_back(p.coords);

  if (const auto *cu = std::get_if<CuAdjacency>(&image.adjacency())) {
    j["adjacency"] = {{"cu", cu->u}};
  } else {
    auto edges = nlohmann::json::array();
    for (auto [a, b]: image.edges())
      edges.push_back({a, b});
    j["adjacency"] = {{"edges", std::move(edges)}};
  }

  if (image.has_labels() || !image.boundary().empty()) {
    nlohmann::json meta = nlohmann::json::object();
    if (image.has_labels()) {
      auto labels = nlohmann::json::array();
      for (PointIndex i = 0; i < image.size(); ++i)
        labels.push_back(image.label(i));
      meta["labels"] = std::move(labels);
    }
    if (!image.boundary().empty())
      meta["boundary"] = image.boundary();
    j["meta"] = std::move(meta);
  }
  return j;
}

} // namespace digicover
