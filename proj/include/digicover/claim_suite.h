//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_CLAIM_SUITE_H_
#define DIGICOVER_CLAIM_SUITE_H_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "digicover/classifiers.h"
#include "digicover/harness.h"
#include "digicover/lifting.h"

namespace digicover {

/// z -> c_{z mod n} from the window [0, q*n] onto the n-point curve.
/// Requires n >= 4, q >= 2.
DigitalMap build_window_map(int n, int q);

/// z -> c_{z mod n} from the 2n-point curve onto the n-point curve.
DigitalMap build_doubling_map(int n);

/// Comparison of the union of fiber neighborhoods with the preimage of the
/// base neighborhood, at one base point of the window map.
struct AssertionRow {
  PointIndex base;
  IndexSet lhs;   // union of N(e) over e in p^{-1}(b)
  IndexSet rhs;   // p^{-1}(N(b))
  IndexSet diff;  // symmetric difference of lhs and rhs
  /// Part of diff away from the window's flagged points.
  IndexSet interior_diff;
  /// No disagreement away from the flagged points.
  bool equal;
  /// diff touches a flagged point.
  bool boundary_tainted;
};

enum class AssertionVerdict {
  kAssertionHolds,   // some untainted row disagrees
  kAssertionFails,   // every row agrees
  kInconclusive,     // only tainted rows disagree
};

struct AssertionReport {
  int n;
  int q;
  std::vector<AssertionRow> rows;
  AssertionVerdict verdict;
};

/// Evaluates, by membership enumeration over the window, whether some base
/// point b has a fiber whose neighborhoods fail to cover p^{-1}(N(b)).
/// Requires n >= 4, q >= 3.
AssertionReport check_fiber_union_assertion(int n, int q);

/// WL-isomorphic surjection that is not a pseudo-covering: the verdicts on
/// one map, together with the lift count of an explicit witness path.
struct WlGapReport {
  ClassVerdict wl_iso;
  bool surjective;
  ClassVerdict han_pseudo;
  /// Witness path checked before the general lifting search, when given.
  std::optional<PointSeq> witness_path;
  PointIndex witness_start = 0;
  std::size_t witness_lifts = 0;
  ULPReport ulp;

  /// wl_iso && surjective && !han_pseudo && the witness has no lift &&
  /// the lifting check fails.
  bool gap_exhibited() const;
};

WlGapReport verify_wl_gap(const DigitalMap &p,
                          std::optional<PointSeq> witness_path,
                          PointIndex witness_start);

/// The window-map instance, with witness path (c_0, c_{n-1}) from 0.
WlGapReport verify_wl_gap(int n, int q);

struct SeparationReport {
  ClassVerdict pak_pseudo;
  ClassVerdict covering;

  bool separated() const { return pak_pseudo.holds && !covering.holds; }
};

SeparationReport verify_pseudocover_separation(const DigitalMap &p,
                                               const PakOptions &options = {});
SeparationReport verify_pseudocover_separation(int n, int q,
                                               const PakOptions &options = {});

struct SuiteOptions {
  std::vector<int> ns {4, 5, 6, 8};
  std::vector<int> qs {2, 3};
  PakOptions pak;
  HarnessOptions harness {3, 6, 0, 1, {}};
};

struct SuiteEntry {
  int n;
  int q;
  std::optional<AssertionReport> assertion;  // q >= 3 only
  WlGapReport wl_gap;
  SeparationReport separation;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  WlGapReport identity_control;
  SeparationReport doubling_control;
  HarnessSummary equivalences;

  /// Every non-adjudication claim reproduced: the gap and separation
  /// patterns on the grid, both controls, and zero harness divergences.
  bool reproduced() const;
};

SuiteReport run_claim_suite(const SuiteOptions &options);

std::string_view verdict_name(AssertionVerdict v);

nlohmann::json assertion_to_json(const AssertionReport &report);
nlohmann::json wl_gap_to_json(const WlGapReport &report);
nlohmann::json separation_to_json(const SeparationReport &report);
nlohmann::json suite_to_json(const SuiteReport &report);
std::string suite_to_text(const SuiteReport &report);

} // namespace digicover

#endif // DIGICOVER_CLAIM_SUITE_H_
