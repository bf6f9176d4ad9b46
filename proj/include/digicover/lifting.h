//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_LIFTING_H_
#define DIGICOVER_LIFTING_H_

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "digicover/maps.h"

namespace digicover {

/// A source path projecting pointwise onto a base path.
struct PathLift {
  PointSeq base_path;
  PointSeq lift;
  PointIndex start;

  friend bool operator==(const PathLift &, const PathLift &) = default;
};

/// All lifts of `base` through p beginning at `start`, in lexicographic order
/// of the lifted sequence. Each lift step goes to a point equal or adjacent to
/// the previous one that maps to the next base point.
///
/// Throws std::invalid_argument if `base` is not a path in the target or
/// `start` does not lie over base[0].
std::vector<PathLift> enumerate_lifts(const DigitalMap &p,
                                      const PointSeq &base, PointIndex start);

/// Number of lifts without materializing them.
std::size_t count_lifts(const DigitalMap &p, const PointSeq &base,
                        PointIndex start);

enum class UlpStatus { kHolds, kFails, kInconclusive };

struct LiftCounterexample {
  PointSeq base_path;
  PointIndex start;
  std::size_t lift_count;
  std::vector<PathLift> lifts;
  /// Endpoint of the unique lift of the base path minus its last step,
  /// where lifting broke down.
  PointIndex frontier;
};

struct ULPReport {
  UlpStatus status = UlpStatus::kHolds;
  int max_length_checked = 0;
  /// Distinct (start, lift endpoint) states expanded.
  std::size_t states_expanded = 0;
  std::optional<LiftCounterexample> counterexample;

  bool holds() const { return status == UlpStatus::kHolds; }
};

struct UlpOptions {
  /// Also enumerate base paths that repeat a point in consecutive steps.
  bool stuttering = false;
};

/// Bounded check of the unique path lifting property: every base path of
/// length at most max_length (number of steps) and every start over its
/// first point must have exactly one lift.
///
/// Instances are ordered by path length, then start index, then base path
/// lexicographically; the counterexample is the first failing instance in
/// that order. Failures whose frontier is a boundary-tagged source point
/// are truncation artifacts of a finite window: they are skipped in favour
/// of a later clean failure and otherwise make the report inconclusive.
///
/// Instances are expanded breadth-first and only while they still have a
/// unique lift. Two instances whose unique lifts end at the same source
/// point extend identically, so only the first in canonical order is kept;
/// the number of expanded states is bounded by the source size.
ULPReport check_unique_path_lifting(const DigitalMap &p, int max_length,
                                    const UlpOptions &options = {});

nlohmann::json lift_to_json(const PathLift &lift);
nlohmann::json ulp_to_json(const ULPReport &report);

} // namespace digicover

#endif // DIGICOVER_LIFTING_H_
