//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DIGICOVER_CLASSIFIERS_H_
#define DIGICOVER_CLASSIFIERS_H_

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "digicover/maps.h"

namespace digicover {

enum class MorphismClass {
  kCovering,
  kLocalIso,
  kPLIso,
  kWLIso,
  kHanPseudo,
  kPakPseudo,
};

inline constexpr MorphismClass kAllClasses[] = {
    MorphismClass::kCovering, MorphismClass::kLocalIso,
    MorphismClass::kPLIso,    MorphismClass::kWLIso,
    MorphismClass::kHanPseudo, MorphismClass::kPakPseudo,
};

/// "covering", "local-iso", "pl-iso", "wl-iso", "han-pseudo", "pak-pseudo".
std::string_view class_name(MorphismClass c);
std::optional<MorphismClass> parse_class(std::string_view name);

/// Which requirement a violation breaks. kFirst..kThird are the numbered
/// conditions of the decomposition-style definitions; the per-point
/// definitions (local, PL, WL) have a single condition, reported as kFirst.
enum class Condition { kContinuity, kSurjectivity, kFirst, kSecond, kThird };

/// A localized failure.
///
/// Anchor kBase: `at` is a target point b and `points` are source points.
/// Anchor kSource: `at` is a source point x and `points` are source points.
///
/// What `points` holds per condition:
///  - continuity: [x'] with x ~ x' and f(x), f(x') not adjeq;
///  - surjectivity: [] (b has an empty fiber);
///  - decomposition condition 1: source points where the union of sheet
///    neighborhoods and p^{-1}(N(b)) disagree;
///  - decomposition condition 2: [e_i, e_j, z] with z in N(e_i) ∩ N(e_j);
///  - decomposition condition 3: [e], the sheet whose restriction fails;
///  - pseudocovering (subset reading): the whole fiber, every member of
///    which is inadmissible; the first fails `condition`;
///  - per-point definitions: [] (the neighborhood of `at` is the witness).
struct Violation {
  enum class Anchor { kBase, kSource };

  Anchor anchor;
  PointIndex at;
  Condition condition;
  std::vector<PointIndex> points;

  friend bool operator==(const Violation &, const Violation &) = default;
};

/// Sheets chosen over one base point, with their closed neighborhoods.
struct SheetRecord {
  PointIndex base;
  IndexSet sheets;
  std::vector<IndexSet> neighborhoods;

  friend bool operator==(const SheetRecord &, const SheetRecord &) = default;
};

using Decomposition = std::vector<SheetRecord>;

struct ClassVerdict {
  MorphismClass kind;
  bool holds = false;
  bool continuous = false;
  bool surjective = false;
  std::variant<Decomposition, Violation> witness;

  const Violation *violation() const {
    return std::get_if<Violation>(&witness);
  }
};

struct PakOptions {
  /// Search pairwise-disjoint sheet sets exhaustively rather than greedily
  /// once a fiber has more than 12 admissible points.
  bool exhaustive = false;
  /// Require the sheet set to be the whole fiber rather than some nonempty
  /// subset of it.
  bool full_fiber = false;
};

/// Continuous surjection whose fibers decompose p^{-1}(N(b)) into disjoint
/// sheet neighborhoods, each mapped isomorphically onto N(b).
///
/// The sheet set is always the whole fiber: if some decomposition with sheets
/// M exists, every e in p^{-1}(b) lies in p^{-1}(N(b)) and hence in N(e_i) for
/// some i in M, and injectivity of p on N(e_i) together with p(e) = p(e_i)
/// forces e = e_i. The same argument applies to the Han variant, whose
/// WL condition is injective on N(e_i).
ClassVerdict check_covering(const DigitalMap &p);

/// Continuous, and every N(x) maps isomorphically onto N(p(x)).
ClassVerdict check_local_iso(const DigitalMap &p);

/// Continuous, and every p(N(x)) is isomorphic, as an induced sub-image of
/// the target, to N(p(x)). The isomorphism need not be p.
ClassVerdict check_pl_iso(const DigitalMap &p);

/// Every N(x) maps isomorphically onto its image p(N(x)). No continuity
/// requirement.
ClassVerdict check_wl_iso(const DigitalMap &p);

/// Surjection whose fibers decompose p^{-1}(N(b)) (N taken in the target)
/// into disjoint sheet neighborhoods on which p is a WL-isomorphism, with
/// neighborhoods inside the sheet neighborhood taken in the induced
/// sub-image.
ClassVerdict check_han_pseudocover(const DigitalMap &p);

/// Surjection where every fiber contains a nonempty set of sheets with
/// pairwise-disjoint neighborhoods, each inside p^{-1}(N(b)) and mapped
/// isomorphically onto its image.
ClassVerdict check_pak_pseudocover(const DigitalMap &p,
                                   const PakOptions &options = {});

ClassVerdict classify(const DigitalMap &p, MorphismClass kind,
                      const PakOptions &options = {});

/// Re-evaluates the condition cited by a failing verdict at the cited
/// points, from the definitions, and returns true iff the violation is
/// reproduced. Returns false for verdicts that hold.
bool replay_violation(const DigitalMap &p, const ClassVerdict &verdict,
                      const PakOptions &options = {});

nlohmann::json verdict_to_json(const ClassVerdict &verdict);

} // namespace digicover

#endif // DIGICOVER_CLASSIFIERS_H_
