//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_ENUMERATE_H_
#define DIGICOVER_ENUMERATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "digicover/maps.h"

namespace digicover {

/// SplitMix64. Used instead of <random> distributions so that seeded runs
/// are bit-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed): state_(seed) { }

  std::uint64_t next();
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::uint64_t state_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Canonical code of the adjacency graph of an image: the minimum, over all
/// vertex orders, of the upper-triangle adjacency bits. Two images get equal
/// codes iff their graphs are isomorphic. Limited to 8 points.
std::uint64_t graph_code(const DigitalImage &image);

/// One representative per isomorphism class of connected graphs on 1..max
/// vertices, as explicit-adjacency images on 0..n-1 in Z. Ordered by size,
/// then code.
std::vector<DigitalImage> connected_graphs(int max_points);

/// Connected c_u images with at most max_points points: intervals in Z and
/// subsets of a small box in Z^2 under c_1 and c_2. One image is kept per
/// graph isomorphism class, the first found in that order.
std::vector<DigitalImage> connected_lattice_images(int max_points);

/// Every continuous surjection source -> target, in lexicographic order of
/// the assignment.
std::vector<DigitalMap> continuous_surjections(const ImagePtr &source,
                                               const ImagePtr &target);

/// Connected c_u image in Z^dim with between 1 and max_points points, grown
/// by random lattice steps from the origin. u is drawn from [1, dim].
DigitalImage random_image(int max_points, int dim, std::uint64_t seed);

/// Connected explicit-adjacency image on 1..max_points points: a random
/// spanning tree plus random chords.
DigitalImage random_graph_image(int max_points, std::uint64_t seed);

/// Randomized greedy assignment with backtracking. Returns nullopt when no
/// continuous surjection exists or none was found within the search budget.
std::optional<DigitalMap> random_continuous_surjection(const ImagePtr &source,
                                                       const ImagePtr &target,
                                                       std::uint64_t seed);

/// Uniformly random (not necessarily continuous) map.
DigitalMap random_map(const ImagePtr &source, const ImagePtr &target,
                      std::uint64_t seed);

} // namespace digicover

#endif // DIGICOVER_ENUMERATE_H_
