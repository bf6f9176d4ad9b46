//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_HARNESS_H_
#define DIGICOVER_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "digicover/classifiers.h"
#include "digicover/lifting.h"

namespace digicover {

struct HarnessOptions {
  /// Exhaustive part: every connected image with at most this many points
  /// (capped at 5), explicit and c_u-embedded, and every continuous
  /// surjection between each ordered pair.
  int max_points = 4;
  /// Size bound for sampled images.
  int sample_points = 6;
  /// Number of sampled continuous surjections.
  int samples = 0;
  std::uint64_t seed = 1;
  PakOptions pak;
};

/// One continuous surjection together with everything the harness computed
/// about it.
struct HarnessInstance {
  std::string origin;  // "exhaustive" or "sampled"
  DigitalMap map;
  std::vector<ClassVerdict> verdicts;  // in kAllClasses order
  ULPReport ulp;

  const ClassVerdict &verdict(MorphismClass c) const {
    return verdicts[static_cast<int>(c)];
  }
};

struct Divergence {
  std::string relation;
  nlohmann::json instance;
};

struct HarnessSummary {
  std::size_t instances = 0;
  std::size_t exhaustive_instances = 0;
  std::size_t sampled_instances = 0;
  /// Instances on which every checked relation held.
  std::size_t agreements = 0;
  std::map<std::string, std::size_t> holds_count;
  std::size_t witnesses_replayed = 0;
  std::size_t replay_failures = 0;
  std::vector<Divergence> divergences;
};

/// Relations every continuous surjection must satisfy:
///   covering == local-iso == han-pseudo == (wl-iso && ULP),
///   local-iso => pl-iso, covering => pak-pseudo, covering => wl-iso,
///   han-pseudo => wl-iso && surjective.
/// Returns the names of the relations that fail.
std::vector<std::string> check_relations(const HarnessInstance &instance);

HarnessInstance evaluate_instance(std::string origin, DigitalMap map,
                                  const PakOptions &pak);

/// Calls `visit` on every instance in canonical order: exhaustive instances
/// first (images ordered explicit-then-lattice, pairs lexicographic, maps
/// lexicographic), then sampled ones in seed order.
void for_each_harness_map(
    const HarnessOptions &options,
    const std::function<void(const std::string &, const DigitalMap &)> &visit);

HarnessSummary run_equivalence_harness(const HarnessOptions &options);

nlohmann::json harness_to_json(const HarnessSummary &summary);

} // namespace digicover

#endif // DIGICOVER_HARNESS_H_
