//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/enumerate.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace digicover {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("Rng::below: zero bound");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  Rng rng(seed ^ (stream * 0xd1b54a32d192ed03ULL));
  rng.next();
  return rng.next();
}

std::uint64_t graph_code(const DigitalImage &image) {
  const int n = image.size();
  if (n > 8)
    throw std::invalid_argument("graph_code: at most 8 points");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        code = (code << 1) | (image.adjacent(perm[i], perm[j]) ? 1 : 0);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Keep the size in the code so graphs of different order never collide.
  return best | (static_cast<std::uint64_t>(n) << 56);
}

std::vector<DigitalImage> connected_graphs(int max_points) {
  if (max_points > 6)
    throw std::invalid_argument("connected_graphs: at most 6 points");
  std::vector<DigitalImage> out;
  for (int n = 1; n <= max_points; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        slots.emplace_back(i, j);
    }
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(Point {i});

    std::map<std::uint64_t, DigitalImage> by_code;
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
      ExplicitAdjacency adj;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1)
          adj.edges.push_back(slots[s]);
      }
      DigitalImage image(1, pts, std::move(adj));
      if (!is_connected(image))
        continue;
      by_code.try_emplace(graph_code(image), std::move(image));
    }
    for (auto &[code, image]: by_code)
      out.push_back(std::move(image));
  }
  return out;
}

std::vector<DigitalImage> connected_lattice_images(int max_points) {
  std::vector<DigitalImage> candidates;
  for (int n = 1; n <= max_points; ++n)
    candidates.push_back(gen_interval(0, n - 1));

  std::vector<Point> box;
  const int width = std::max(2, max_points);
  const int height = std::min(std::max(2, max_points), 3);
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y < height; ++y)
      box.push_back(Point {x, y});
  }
  for (int u = 1; u <= 2; ++u) {
    // Subsets of the box in increasing size, then lexicographic order.
    for (int k = 1; k <= max_points; ++k) {
      std::vector<char> pick(box.size(), 0);
      std::fill(pick.begin(), pick.begin() + k, 1);
      do {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < box.size(); ++i) {
          if (pick[i])
            pts.push_back(box[i]);
        }
        DigitalImage image(2, std::move(pts), CuAdjacency {u});
        if (is_connected(image))
          candidates.push_back(std::move(image));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }

  std::vector<DigitalImage> out;
  std::set<std::uint64_t> codes;
  for (auto &image: candidates) {
    if (codes.insert(graph_code(image)).second)
      out.push_back(std::move(image));
  }
  return out;
}

namespace {

void surjections_from(const ImagePtr &source,
                      const ImagePtr &target, std::vector<PointIndex> &a,
                      std::vector<int> &hits, int uncovered,
                      std::vector<DigitalMap> &out) {
  const int x = static_cast<int>(a.size());
  const int remaining = source->size() - x;
  if (uncovered > remaining)
    return;
  if (remaining == 0) {
    out.emplace_back(source, target, a);
    return;
  }
  for (PointIndex b = 0; b < target->size(); ++b) {
    bool ok = true;
    for (PointIndex y: source->neighbors(x)) {
      if (y < x && !target->adjeq(a[y], b)) {
        ok = false;
        break;
      }
    }
    if (!ok)
      continue;
    a.push_back(b);
    const bool fresh = hits[b]++ == 0;
    surjections_from(source, target, a, hits,
                     uncovered - (fresh ? 1 : 0), out);
    --hits[b];
    a.pop_back();
  }
}

} // namespace

std::vector<DigitalMap> continuous_surjections(const ImagePtr &source,
                                               const ImagePtr &target) {
  std::vector<DigitalMap> out;
  std::vector<PointIndex> a;
  std::vector<int> hits(target->size(), 0);
  surjections_from(source, target, a, hits, target->size(), out);
  return out;
}

DigitalImage random_image(int max_points, int dim, std::uint64_t seed) {
  if (max_points < 1 || dim < 1)
    throw std::invalid_argument("random_image: bounds must be positive");
  Rng rng(seed);
  const int k = 1 + static_cast<int>(rng.below(max_points));
  const int u = 1 + static_cast<int>(rng.below(dim));

  // All c_u offsets of the origin.
  std::vector<std::vector<std::int64_t>> offsets;
  std::vector<std::int64_t> off(dim, -1);
  while (true) {
    int nonzero = 0;
    for (auto c: off)
      nonzero += c != 0;
    if (nonzero >= 1 && nonzero <= u)
      offsets.push_back(off);
    int i = 0;
    while (i < dim && off[i] == 1)
      off[i++] = -1;
    if (i == dim)
      break;
    ++off[i];
  }

  std::vector<Point> pts {Point(std::vector<std::int64_t>(dim, 0))};
  std::set<Point> present(pts.begin(), pts.end());
  while (static_cast<int>(pts.size()) < k) {
    const Point &from = pts[rng.below(pts.size())];
    const auto &step = offsets[rng.below(offsets.size())];
    Point next = from;
    for (int i = 0; i < dim; ++i)
      next.coords[i] += step[i];
    if (present.insert(next).second)
      pts.push_back(std::move(next));
  }
  return DigitalImage(dim, std::move(pts), CuAdjacency {u});
}

DigitalImage random_graph_image(int max_points, std::uint64_t seed) {
  if (max_points < 1)
    throw std::invalid_argument("random_graph_image: bound must be positive");
  Rng rng(seed);
  const int k = 1 + static_cast<int>(rng.below(max_points));
  std::vector<Point> pts;
  for (int i = 0; i < k; ++i)
    pts.push_back(Point {i});
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i < k; ++i)
    edges.emplace(static_cast<int>(rng.below(i)), i);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (rng.below(3) == 0)
        edges.emplace(i, j);
    }
  }
  ExplicitAdjacency adj;
  adj.edges.assign(edges.begin(), edges.end());
  return DigitalImage(1, std::move(pts), std::move(adj));
}

namespace {

class SurjectionSearch {
public:
  SurjectionSearch(const DigitalImage &source, const DigitalImage &target,
                   Rng &rng)
      : source_(source), target_(target), rng_(rng),
        assignment_(source.size(), -1), hits_(target.size(), 0) {
    // Breadth-first order from a random root in each component, so that
    // every point after a component's root has an assigned neighbor.
    std::vector<char> seen(source.size(), 0);
    std::vector<PointIndex> roots(source.size());
    std::iota(roots.begin(), roots.end(), 0);
    rng_.shuffle(roots);
    for (PointIndex r: roots) {
      if (seen[r])
        continue;
      seen[r] = 1;
      std::size_t head = order_.size();
      order_.push_back(r);
      while (head < order_.size()) {
        PointIndex v = order_[head++];
        for (PointIndex w: source.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool run(std::size_t depth, int uncovered) {
    if (++steps_ > kBudget)
      return false;
    const int remaining = static_cast<int>(order_.size() - depth);
    if (uncovered > remaining)
      return false;
    if (remaining == 0)
      return true;

    const PointIndex x = order_[depth];
    std::vector<PointIndex> candidates;
    for (PointIndex b = 0; b < target_.size(); ++b) {
      bool ok = true;
      for (PointIndex y: source_.neighbors(x)) {
        if (assignment_[y] >= 0 && !target_.adjeq(assignment_[y], b)) {
          ok = false;
          break;
        }
      }
      if (ok)
        candidates.push_back(b);
    }
    rng_.shuffle(candidates);
    // Prefer targets not yet covered once covering is getting tight.
    if (uncovered == remaining) {
      std::stable_partition(candidates.begin(), candidates.end(),
                            [&](PointIndex b) { return hits_[b] == 0; });
    }
    for (PointIndex b: candidates) {
      assignment_[x] = b;
      const bool fresh = hits_[b]++ == 0;
      if (run(depth + 1, uncovered - (fresh ? 1 : 0)))
        return true;
      --hits_[b];
      assignment_[x] = -1;
      if (steps_ > kBudget)
        return false;
    }
    return false;
  }

  const std::vector<PointIndex> &assignment() const { return assignment_; }

private:
  static constexpr std::size_t kBudget = 20000;

  const DigitalImage &source_;
  const DigitalImage &target_;
  Rng &rng_;
  std::vector<PointIndex> order_;
  std::vector<PointIndex> assignment_;
  std::vector<int> hits_;
  std::size_t steps_ = 0;
};

} // namespace

std::optional<DigitalMap> random_continuous_surjection(const ImagePtr &source,
                                                       const ImagePtr &target,
                                                       std::uint64_t seed) {
  if (source->size() < target->size())
    return std::nullopt;
  Rng rng(seed);
  SurjectionSearch search(*source, *target, rng);
  if (!search.run(0, target->size()))
    return std::nullopt;
  return DigitalMap(source, target, search.assignment());
}

DigitalMap random_map(const ImagePtr &source, const ImagePtr &target,
                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PointIndex> a(source->size());
  for (auto &b: a)
    b = static_cast<PointIndex>(rng.below(target->size()));
  return DigitalMap(source, target, std::move(a));
}

} // namespace digicover
