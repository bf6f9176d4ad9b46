//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_MAPS_H_
#define DIGICOVER_MAPS_H_

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "digicover/image.h"

namespace digicover {

using ImagePtr = std::shared_ptr<const DigitalImage>;

inline ImagePtr share(DigitalImage image) {
  return std::make_shared<const DigitalImage>(std::move(image));
}

/// A total function between the point sets of two images, stored
/// extensionally as one target index per source index.
class DigitalMap {
public:
  /// Throws std::invalid_argument unless the assignment is total and lands
  /// in the target.
  DigitalMap(ImagePtr source, ImagePtr target,
             std::vector<PointIndex> assignment);

  const DigitalImage &source() const { return *source_; }
  const DigitalImage &target() const { return *target_; }
  const ImagePtr &source_ptr() const { return source_; }
  const ImagePtr &target_ptr() const { return target_; }

  PointIndex operator()(PointIndex x) const { return assignment_[x]; }
  const std::vector<PointIndex> &assignment() const { return assignment_; }

  /// p^{-1}(b), sorted.
  const IndexSet &fiber(PointIndex b) const { return fibers_[b]; }
  /// f(S) for a set of source indices.
  IndexSet image_of(const IndexSet &s) const;
  /// f^{-1}(T) for a set of target indices.
  IndexSet preimage(const IndexSet &t) const;

private:
  ImagePtr source_;
  ImagePtr target_;
  std::vector<PointIndex> assignment_;
  std::vector<IndexSet> fibers_;
};

DigitalMap identity_map(const ImagePtr &image);

/// g after f. Requires f.target() == g.source().
DigitalMap compose(const DigitalMap &g, const DigitalMap &f);

/// First adjacent source pair (in canonical order) whose images are neither
/// equal nor adjacent.
std::optional<std::pair<PointIndex, PointIndex>>
find_discontinuity(const DigitalMap &f);

bool is_continuous(const DigitalMap &f);
bool is_surjective(const DigitalMap &f);
bool is_injective(const DigitalMap &f);

/// Bijection with x ~ x' iff f(x) ~ f(x').
bool is_isomorphism(const DigitalMap &f);

/// True iff f maps S bijectively onto T and, for x, x' in S,
/// x ~ x' iff f(x) ~ f(x'). Works directly on the parent index spaces, so
/// it agrees with is_isomorphism(restrict_to(f, S, T)) without building the
/// sub-images.
bool maps_isomorphically(const DigitalMap &f, const IndexSet &s,
                         const IndexSet &t);

/// True iff f|S is an isomorphism onto f(S).
bool maps_isomorphically_onto_image(const DigitalMap &f, const IndexSet &s);

/// The induced sub-image of a parent image on a nonempty subset.
class SubImage {
public:
  /// Throws std::invalid_argument on an empty subset or stray indices.
  SubImage(ImagePtr parent, IndexSet subset);

  const DigitalImage &parent() const { return *parent_; }
  const ImagePtr &parent_ptr() const { return parent_; }
  const IndexSet &subset() const { return subset_; }
  int size() const { return static_cast<int>(subset_.size()); }

  /// Adjacency between the k-th and l-th members of the subset.
  bool adjacent(int k, int l) const {
    return parent_->adjacent(subset_[k], subset_[l]);
  }
  int degree(int k) const;

  /// A standalone image on the subset: c_u adjacency is kept as is (it is
  /// already induced), explicit edges are restricted to the subset.
  DigitalImage to_image() const;

private:
  ImagePtr parent_;
  IndexSet subset_;
};

SubImage sub_image(const ImagePtr &image, IndexSet subset);

/// f restricted to S, with codomain the sub-image on f(S).
DigitalMap restrict(const DigitalMap &f, const IndexSet &s);
/// f restricted to S, with codomain the sub-image on T. Requires f(S) ⊆ T.
DigitalMap restrict_to(const DigitalMap &f, const IndexSet &s,
                       const IndexSet &t);

/// Adjacency-preserving bijection a -> b, if one exists, as a list of
/// positions into b.subset(). Backtracking over degree-compatible
/// candidates, after a degree-sequence check.
std::optional<std::vector<int>> find_isomorphism(const SubImage &a,
                                                 const SubImage &b);

inline bool subgraphs_isomorphic(const SubImage &a, const SubImage &b) {
  return find_isomorphism(a, b).has_value();
}

// JSON: { "source": <image>, "target": <image>, "pairs": [[s, t], ...] }.
// "source"/"target" may instead be strings naming image files, resolved
// relative to `base_dir`.
DigitalMap map_from_json(const nlohmann::json &j,
                         const std::string &base_dir = ".");
nlohmann::json map_to_json(const DigitalMap &f);

} // namespace digicover

#endif // DIGICOVER_MAPS_H_
