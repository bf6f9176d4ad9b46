//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/maps.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace digicover {

DigitalMap::DigitalMap(ImagePtr source, ImagePtr target,
                       std::vector<PointIndex> assignment)
    : source_(std::move(source)), target_(std::move(target)),
      assignment_(std::move(assignment)) {
  if (!source_ || !target_)
    throw std::invalid_argument("map: null source or target image");
  if (static_cast<int>(assignment_.size()) != source_->size())
    throw std::invalid_argument("map: assignment is not total");
  fibers_.resize(target_->size());
  for (PointIndex x = 0; x < source_->size(); ++x) {
    PointIndex b = assignment_[x];
    if (b < 0 || b >= target_->size()) {
      throw std::invalid_argument("map: value of source point "
                                  + std::to_string(x)
                                  + " is not a target point");
    }
    fibers_[b].push_back(x);
  }
}

IndexSet DigitalMap::image_of(const IndexSet &s) const {
  IndexSet out;
  out.reserve(s.size());
  for (PointIndex x: s)
    out.push_back(assignment_[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet DigitalMap::preimage(const IndexSet &t) const {
  IndexSet out;
  for (PointIndex b: t)
    out.insert(out.end(), fibers_[b].begin(), fibers_[b].end());
  std::sort(out.begin(), out.end());
  return out;
}

DigitalMap identity_map(const ImagePtr &image) {
  std::vector<PointIndex> a(image->size());
  for (PointIndex i = 0; i < image->size(); ++i)
    a[i] = i;
  return DigitalMap(image, image, std::move(a));
}

DigitalMap compose(const DigitalMap &g, const DigitalMap &f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose: f's target is not g's source");
  std::vector<PointIndex> a(f.source().size());
  for (PointIndex x = 0; x < f.source().size(); ++x)
    a[x] = g(f(x));
  return DigitalMap(f.source_ptr(), g.target_ptr(), std::move(a));
}

std::optional<std::pair<PointIndex, PointIndex>>
find_discontinuity(const DigitalMap &f) {
  const auto &src = f.source();
  for (PointIndex x = 0; x < src.size(); ++x) {
    for (PointIndex y: src.neighbors(x)) {
      if (x < y && !f.target().adjeq(f(x), f(y)))
        return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool is_continuous(const DigitalMap &f) {
  return !find_discontinuity(f).has_value();
}

bool is_surjective(const DigitalMap &f) {
  for (PointIndex b = 0; b < f.target().size(); ++b) {
    if (f.fiber(b).empty())
      return false;
  }
  return true;
}

bool is_injective(const DigitalMap &f) {
  for (PointIndex b = 0; b < f.target().size(); ++b) {
    if (f.fiber(b).size() > 1)
      return false;
  }
  return true;
}

bool is_isomorphism(const DigitalMap &f) {
  if (f.source().size() != f.target().size() || !is_injective(f))
    return false;
  const auto &src = f.source();
  for (PointIndex x = 0; x < src.size(); ++x) {
    for (PointIndex y = x + 1; y < src.size(); ++y) {
      if (src.adjacent(x, y) != f.target().adjacent(f(x), f(y)))
        return false;
    }
  }
  return true;
}

bool maps_isomorphically(const DigitalMap &f, const IndexSet &s,
                         const IndexSet &t) {
  if (s.size() != t.size())
    return false;
  IndexSet img = f.image_of(s);
  if (img != t)
    return false;
  return maps_isomorphically_onto_image(f, s);
}

bool maps_isomorphically_onto_image(const DigitalMap &f, const IndexSet &s) {
  const auto &src = f.source();
  const auto &tgt = f.target();
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (std::size_t l = k + 1; l < s.size(); ++l) {
      const PointIndex fx = f(s[k]), fy = f(s[l]);
      if (fx == fy)
        return false;
      if (src.adjacent(s[k], s[l]) != tgt.adjacent(fx, fy))
        return false;
    }
  }
  return true;
}

SubImage::SubImage(ImagePtr parent, IndexSet subset)
    : parent_(std::move(parent)), subset_(std::move(subset)) {
  if (subset_.empty())
    throw std::invalid_argument("sub_image: empty subset");
  std::sort(subset_.begin(), subset_.end());
  subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
  if (subset_.front() < 0 || subset_.back() >= parent_->size())
    throw std::invalid_argument("sub_image: index outside the parent image");
}

int SubImage::degree(int k) const {
  int d = 0;
  for (int l = 0; l < size(); ++l)
    d += (l != k && adjacent(k, l)) ? 1 : 0;
  return d;
}

DigitalImage SubImage::to_image() const {
  std::vector<Point> pts;
  std::vector<std::string> labels;
  IndexSet boundary;
  for (int k = 0; k < size(); ++k) {
    pts.push_back(parent_->point(subset_[k]));
    if (parent_->has_labels())
      labels.push_back(parent_->label(subset_[k]));
    if (parent_->is_boundary(subset_[k]))
      boundary.push_back(k);
  }
  // The subset is sorted, so positions are already the canonical order.
  Adjacency adj;
  if (parent_->is_cu()) {
    adj = parent_->adjacency();
  } else {
    ExplicitAdjacency ex;
    for (int k = 0; k < size(); ++k) {
      for (int l = k + 1; l < size(); ++l) {
        if (adjacent(k, l))
          ex.edges.emplace_back(k, l);
      }
    }
    adj = std::move(ex);
  }
  return DigitalImage(parent_->dim(), std::move(pts), std::move(adj),
                      std::move(labels), std::move(boundary));
}

SubImage sub_image(const ImagePtr &image, IndexSet subset) {
  return SubImage(image, std::move(subset));
}

DigitalMap restrict_to(const DigitalMap &f, const IndexSet &s,
                       const IndexSet &t) {
  SubImage dom(f.source_ptr(), s);
  SubImage cod(f.target_ptr(), t);
  std::vector<PointIndex> a;
  for (PointIndex x: dom.subset()) {
    const PointIndex fx = f(x);
    auto it = std::lower_bound(cod.subset().begin(), cod.subset().end(), fx);
    if (it == cod.subset().end() || *it != fx)
      throw std::invalid_argument("restrict_to: f(S) is not contained in T");
    a.push_back(static_cast<PointIndex>(it - cod.subset().begin()));
  }
  return DigitalMap(share(dom.to_image()), share(cod.to_image()),
                    std::move(a));
}

DigitalMap restrict(const DigitalMap &f, const IndexSet &s) {
  for (PointIndex x: s) {
    if (x < 0 || x >= f.source().size())
      throw std::invalid_argument("restrict: index outside the source");
  }
  return restrict_to(f, s, f.image_of(s));
}

namespace {

class IsoSearch {
public:
  IsoSearch(const SubImage &a, const SubImage &b): a_(a), b_(b) {
    const int n = a.size();
    deg_a_.resize(n);
    deg_b_.resize(n);
    for (int k = 0; k < n; ++k) {
      deg_a_[k] = a.degree(k);
      deg_b_[k] = b.degree(k);
    }
    // Most constrained vertices first; ties by position for determinism.
    order_.resize(n);
    for (int k = 0; k < n; ++k)
      order_[k] = k;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return deg_a_[x] > deg_a_[y]; });
    map_.assign(n, -1);
    used_.assign(n, 0);
  }

  bool degree_sequences_match() const {
    auto da = deg_a_, db = deg_b_;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size())
      return true;
    const int v = order_[depth];
    for (int w = 0; w < b_.size(); ++w) {
      if (used_[w] || deg_b_[w] != deg_a_[v] || !consistent(v, w, depth))
        continue;
      map_[v] = w;
      used_[w] = 1;
      if (run(depth + 1))
        return true;
      used_[w] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const std::vector<int> &mapping() const { return map_; }

private:
  bool consistent(int v, int w, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const int u = order_[i];
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], w))
        return false;
    }
    return true;
  }

  const SubImage &a_;
  const SubImage &b_;
  std::vector<int> deg_a_, deg_b_, order_, map_;
  std::vector<char> used_;
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const SubImage &a,
                                                 const SubImage &b) {
  if (a.size() != b.size())
    return std::nullopt;
  IsoSearch search(a, b);
  if (!search.degree_sequences_match() || !search.run())
    return std::nullopt;
  return search.mapping();
}

namespace {

nlohmann::json load_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

// Loads an embedded or referenced image, also returning the canonical index
// of each point in file order.
std::pair<ImagePtr, std::vector<PointIndex>>
load_side(const nlohmann::json &j, const std::string &field,
          const std::string &base_dir) {
  if (!j.contains(field))
    throw std::invalid_argument("map: missing field \"" + field + "\"");
  nlohmann::json doc = j[field];
  if (doc.is_string())
    doc = load_json_file(std::filesystem::path(base_dir)
                         / doc.get<std::string>());
  DigitalImage image = [&] {
    try {
      return image_from_json(doc);
    } catch (const std::invalid_argument &e) {
      throw std::invalid_argument(field + "." + e.what());
    }
  }();
  std::vector<PointIndex> canon;
  for (const auto &c: doc["points"])
    canon.push_back(image.index_of(Point(c.get<std::vector<std::int64_t>>())));
  return {share(std::move(image)), std::move(canon)};
}

} // namespace

DigitalMap map_from_json(const nlohmann::json &j,
                         const std::string &base_dir) {
  if (!j.is_object())
    throw std::invalid_argument("map: expected a JSON object");
  auto [src, src_canon] = load_side(j, "source", base_dir);
  auto [tgt, tgt_canon] = load_side(j, "target", base_dir);

  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw std::invalid_argument("map: missing array field \"pairs\"");
  const auto &pairs = j["pairs"];
  std::vector<PointIndex> a(src->size(), -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string where = "pairs[" + std::to_string(k) + "]: ";
    const auto &pr = pairs[k];
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer()
        || !pr[1].is_number_integer())
      throw std::invalid_argument(where + "expected [srcIndex, tgtIndex]");
    const int s = pr[0].get<int>(), t = pr[1].get<int>();
    if (s < 0 || s >= src->size())
      throw std::invalid_argument(where + "source index out of range");
    if (t < 0 || t >= tgt->size())
      throw std::invalid_argument(where + "target index out of range");
    PointIndex &slot = a[src_canon[s]];
    if (slot >= 0)
      throw std::invalid_argument(where + "source point assigned twice");
    slot = tgt_canon[t];
  }
  for (PointIndex x = 0; x < src->size(); ++x) {
    if (a[x] < 0)
      throw std::invalid_argument("map: source point " + src->label(x)
                                  + " has no assigned value");
  }
  return DigitalMap(std::move(src), std::move(tgt), std::move(a));
}

nlohmann::json map_to_json(const DigitalMap &f) {
  nlohmann::json j;
  j["source"] = image_to_json(f.source());
  j["target"] = image_to_json(f.target());
  auto pairs = nlohmann::json::array();
  for (PointIndex x = 0; x < f.source().size(); ++x)
    pairs.push_back({x, f(x)});
  j["pairs"] = std::move(pairs);
  return j;
}

} // namespace digicover
