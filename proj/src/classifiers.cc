//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/classifiers.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace digicover {

std::string_view class_name(MorphismClass c) {
  switch (c) {
  case MorphismClass::kCovering:
    return "covering";
  case MorphismClass::kLocalIso:
    return "local-iso";
  case MorphismClass::kPLIso:
    return "pl-iso";
  case MorphismClass::kWLIso:
    return "wl-iso";
  case MorphismClass::kHanPseudo:
    return "han-pseudo";
  case MorphismClass::kPakPseudo:
    return "pak-pseudo";
  }
  return "unknown";
}

std::optional<MorphismClass> parse_class(std::string_view name) {
  for (MorphismClass c: kAllClasses) {
    if (class_name(c) == name)
      return c;
  }
  return std::nullopt;
}

namespace {

IndexSet set_union(const IndexSet &a, const IndexSet &b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

IndexSet set_intersection(const IndexSet &a, const IndexSet &b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet &a, const IndexSet &b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

IndexSet symmetric_difference(const IndexSet &a, const IndexSet &b) {
  IndexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

bool is_subset(const IndexSet &a, const IndexSet &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// p restricted to the induced sub-image on S is a WL-isomorphism: every
// neighborhood taken inside S maps isomorphically onto its image.
bool wl_on_subimage(const DigitalMap &p, const IndexSet &s) {
  for (PointIndex x: s) {
    IndexSet local = set_intersection(p.source().closed_neighborhood(x), s);
    if (!maps_isomorphically_onto_image(p, local))
      return false;
  }
  return true;
}

ClassVerdict make(MorphismClass kind, const DigitalMap &p) {
  ClassVerdict v;
  v.kind = kind;
  v.continuous = is_continuous(p);
  v.surjective = is_surjective(p);
  return v;
}

ClassVerdict fail(ClassVerdict v, Violation violation) {
  v.holds = false;
  v.witness = std::move(violation);
  return v;
}

std::optional<Violation> precondition(const DigitalMap &p, bool continuity,
                                      bool surjectivity) {
  if (continuity) {
    if (auto bad = find_discontinuity(p)) {
      return Violation {Violation::Anchor::kSource, bad->first,
                        Condition::kContinuity, {bad->second}};
    }
  }
  if (surjectivity) {
    for (PointIndex b = 0; b < p.target().size(); ++b) {
      if (p.fiber(b).empty())
        return Violation {Violation::Anchor::kBase, b,
                          Condition::kSurjectivity, {}};
    }
  }
  return std::nullopt;
}

Decomposition fibers_as_decomposition(const DigitalMap &p) {
  Decomposition d;
  for (PointIndex b = 0; b < p.target().size(); ++b) {
    SheetRecord rec {b, p.fiber(b), {}};
    for (PointIndex e: rec.sheets)
      rec.neighborhoods.push_back(p.source().closed_neighborhood(e));
    d.push_back(std::move(rec));
  }
  return d;
}

enum class SheetMap { kIsoOntoBase, kWLIntoBase, kIsoOntoImage };

// Checks the three decomposition conditions at b with the whole fiber as
// the sheet set. `exact_union` selects equality (covering, Han) or
// inclusion (pseudocovering) in condition 1.
std::optional<Violation> check_fiber_decomposition(const DigitalMap &p,
                                                   PointIndex b,
                                                   bool exact_union,
                                                   SheetMap sheet_map) {
  const auto &src = p.source();
  const IndexSet &fiber = p.fiber(b);
  const IndexSet base_nbhd = p.target().closed_neighborhood(b);
  const IndexSet rhs = p.preimage(base_nbhd);

  std::vector<IndexSet> nbhds;
  IndexSet lhs;
  for (PointIndex e: fiber) {
    nbhds.push_back(src.closed_neighborhood(e));
    lhs = set_union(lhs, nbhds.back());
  }

  IndexSet bad = exact_union ? symmetric_difference(lhs, rhs)
                             : set_difference(lhs, rhs);
  if (!bad.empty())
    return Violation {Violation::Anchor::kBase, b, Condition::kFirst, bad};

  for (std::size_t i = 0; i < fiber.size(); ++i) {
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      IndexSet common = set_intersection(nbhds[i], nbhds[j]);
      if (!common.empty()) {
        return Violation {Violation::Anchor::kBase, b, Condition::kSecond,
                          {fiber[i], fiber[j], common.front()}};
      }
    }
  }

  for (std::size_t i = 0; i < fiber.size(); ++i) {
    bool ok = false;
    switch (sheet_map) {
    case SheetMap::kIsoOntoBase:
      ok = maps_isomorphically(p, nbhds[i], base_nbhd);
      break;
    case SheetMap::kWLIntoBase:
      ok = wl_on_subimage(p, nbhds[i]);
      break;
    case SheetMap::kIsoOntoImage:
      ok = maps_isomorphically_onto_image(p, nbhds[i]);
      break;
    }
    if (!ok)
      return Violation {Violation::Anchor::kBase, b, Condition::kThird,
                        {fiber[i]}};
  }
  return std::nullopt;
}

ClassVerdict check_decomposition(MorphismClass kind, const DigitalMap &p,
                                 bool need_continuity, bool exact_union,
                                 SheetMap sheet_map) {
  ClassVerdict v = make(kind, p);
  if (auto bad = precondition(p, need_continuity, true))
    return fail(std::move(v), std::move(*bad));
  for (PointIndex b = 0; b < p.target().size(); ++b) {
    if (auto bad = check_fiber_decomposition(p, b, exact_union, sheet_map))
      return fail(std::move(v), std::move(*bad));
  }
  v.holds = true;
  v.witness = fibers_as_decomposition(p);
  return v;
}

template <class Pred>
ClassVerdict check_per_point(MorphismClass kind, const DigitalMap &p,
                             bool need_continuity, Pred &&pred) {
  ClassVerdict v = make(kind, p);
  if (auto bad = precondition(p, need_continuity, false))
    return fail(std::move(v), std::move(*bad));
  for (PointIndex x = 0; x < p.source().size(); ++x) {
    if (!pred(x)) {
      return fail(std::move(v), Violation {Violation::Anchor::kSource, x,
                                           Condition::kFirst, {}});
    }
  }
  v.holds = true;
  v.witness = fibers_as_decomposition(p);
  return v;
}

// Largest pairwise-disjoint subfamily of candidate neighborhoods.
class DisjointSheetSearch {
public:
  explicit DisjointSheetSearch(std::vector<IndexSet> nbhds)
      : nbhds_(std::move(nbhds)) { }

  std::vector<int> exhaustive() {
    best_.clear();
    current_.clear();
    branch(0);
    return best_;
  }

  std::vector<int> greedy() const {
    std::vector<int> chosen;
    for (int i = 0; i < static_cast<int>(nbhds_.size()); ++i) {
      if (disjoint_from(chosen, i))
        chosen.push_back(i);
    }
    return chosen;
  }

private:
  bool disjoint_from(const std::vector<int> &chosen, int i) const {
    for (int c: chosen) {
      if (!set_intersection(nbhds_[c], nbhds_[i]).empty())
        return false;
    }
    return true;
  }

  void branch(int i) {
    const int n = static_cast<int>(nbhds_.size());
    if (current_.size() > best_.size())
      best_ = current_;
    if (i == n || current_.size() + (n - i) <= best_.size())
      return;
    if (disjoint_from(current_, i)) {
      current_.push_back(i);
      branch(i + 1);
      current_.pop_back();
    }
    branch(i + 1);
  }

  std::vector<IndexSet> nbhds_;
  std::vector<int> best_, current_;
};

constexpr std::size_t kExhaustiveSheetLimit = 12;

bool pak_union_ok(const DigitalMap &p, PointIndex b, const IndexSet &nbhd) {
  return is_subset(nbhd, p.preimage(p.target().closed_neighborhood(b)));
}

} // namespace

ClassVerdict check_covering(const DigitalMap &p) {
  return check_decomposition(MorphismClass::kCovering, p, true, true,
                             SheetMap::kIsoOntoBase);
}

ClassVerdict check_han_pseudocover(const DigitalMap &p) {
  return check_decomposition(MorphismClass::kHanPseudo, p, false, true,
                             SheetMap::kWLIntoBase);
}

ClassVerdict check_local_iso(const DigitalMap &p) {
  const auto &src = p.source();
  const auto &tgt = p.target();
  return check_per_point(MorphismClass::kLocalIso, p, true, [&](PointIndex x) {
    return maps_isomorphically(p, src.closed_neighborhood(x),
                               tgt.closed_neighborhood(p(x)));
  });
}

ClassVerdict check_pl_iso(const DigitalMap &p) {
  const auto &src = p.source();
  const auto &tgt = p.target();
  return check_per_point(MorphismClass::kPLIso, p, true, [&](PointIndex x) {
    SubImage image(p.target_ptr(), p.image_of(src.closed_neighborhood(x)));
    SubImage around(p.target_ptr(), tgt.closed_neighborhood(p(x)));
    return subgraphs_isomorphic(image, around);
  });
}

ClassVerdict check_wl_iso(const DigitalMap &p) {
  const auto &src = p.source();
  return check_per_point(MorphismClass::kWLIso, p, false, [&](PointIndex x) {
    return maps_isomorphically_onto_image(p, src.closed_neighborhood(x));
  });
}

ClassVerdict check_pak_pseudocover(const DigitalMap &p,
                                   const PakOptions &options) {
  if (options.full_fiber) {
    return check_decomposition(MorphismClass::kPakPseudo, p, false, false,
                               SheetMap::kIsoOntoImage);
  }

  ClassVerdict v = make(MorphismClass::kPakPseudo, p);
  if (auto bad = precondition(p, false, true))
    return fail(std::move(v), std::move(*bad));

  const auto &src = p.source();
  Decomposition decomposition;
  for (PointIndex b = 0; b < p.target().size(); ++b) {
    const IndexSet &fiber = p.fiber(b);
    IndexSet admissible;
    std::vector<IndexSet> nbhds;
    std::optional<Condition> first_failure;
    for (PointIndex e: fiber) {
      IndexSet nbhd = src.closed_neighborhood(e);
      std::optional<Condition> failure;
      if (!pak_union_ok(p, b, nbhd))
        failure = Condition::kFirst;
      else if (!maps_isomorphically_onto_image(p, nbhd))
        failure = Condition::kThird;
      if (failure) {
        if (!first_failure)
          first_failure = failure;
        continue;
      }
      admissible.push_back(e);
      nbhds.push_back(std::move(nbhd));
    }
    if (admissible.empty()) {
      return fail(std::move(v), Violation {Violation::Anchor::kBase, b,
                                           *first_failure, fiber});
    }

    DisjointSheetSearch search(nbhds);
    const bool exhaustive =
        options.exhaustive || admissible.size() <= kExhaustiveSheetLimit;
    std::vector<int> chosen = exhaustive ? search.exhaustive()
                                         : search.greedy();
    SheetRecord rec {b, {}, {}};
    for (int i: chosen) {
      rec.sheets.push_back(admissible[i]);
      rec.neighborhoods.push_back(nbhds[i]);
    }
    decomposition.push_back(std::move(rec));
  }
  v.holds = true;
  v.witness = std::move(decomposition);
  return v;
}

ClassVerdict classify(const DigitalMap &p, MorphismClass kind,
                      const PakOptions &options) {
  switch (kind) {
  case MorphismClass::kCovering:
    return check_covering(p);
  case MorphismClass::kLocalIso:
    return check_local_iso(p);
  case MorphismClass::kPLIso:
    return check_pl_iso(p);
  case MorphismClass::kWLIso:
    return check_wl_iso(p);
  case MorphismClass::kHanPseudo:
    return check_han_pseudocover(p);
  case MorphismClass::kPakPseudo:
    return check_pak_pseudocover(p, options);
  }
  throw std::invalid_argument("classify: unknown class");
}

namespace {

// Replay helpers evaluate definitions through the restricted-map route
// (sub-images built as standalone images), independently of the index-level
// helpers used by the checkers.

bool restriction_is_iso_onto(const DigitalMap &p, const IndexSet &s,
                             const IndexSet &t) {
  if (!is_subset(p.image_of(s), t))
    return false;
  return is_isomorphism(restrict_to(p, s, t));
}

bool restriction_is_iso_onto_image(const DigitalMap &p, const IndexSet &s) {
  return is_isomorphism(restrict(p, s));
}

// Small cases try every bijection; larger ones fall back to the
// backtracking search.
bool isomorphic_images(const DigitalImage &a, const DigitalImage &b) {
  if (a.size() != b.size())
    return false;
  const int n = a.size();
  if (n > 8) {
    auto all = [](const DigitalImage &im) {
      IndexSet s(im.size());
      for (int k = 0; k < im.size(); ++k)
        s[k] = k;
      return s;
    };
    return subgraphs_isomorphic(SubImage(share(a), all(a)),
                                SubImage(share(b), all(b)));
  }
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k)
    perm[k] = k;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j)
        ok = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    }
    if (ok)
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool pak_point_fails(const DigitalMap &p, PointIndex b, PointIndex e,
                     Condition c) {
  const IndexSet nbhd = p.source().closed_neighborhood(e);
  if (c == Condition::kFirst)
    return !is_subset(p.image_of(nbhd), p.target().closed_neighborhood(b));
  if (c == Condition::kThird)
    return !restriction_is_iso_onto_image(p, nbhd);
  return false;
}

bool replay_base_condition(const DigitalMap &p, const ClassVerdict &v,
                           const Violation &w, const PakOptions &options) {
  const auto &src = p.source();
  const auto &tgt = p.target();
  const PointIndex b = w.at;
  if (b < 0 || b >= tgt.size())
    return false;
  const IndexSet &fiber = p.fiber(b);
  const bool pak = v.kind == MorphismClass::kPakPseudo;

  if (pak && !options.full_fiber) {
    if (w.points != fiber || fiber.empty())
      return false;
    if (!pak_point_fails(p, b, fiber.front(), w.condition))
      return false;
    return std::all_of(fiber.begin(), fiber.end(), [&](PointIndex e) {
      return pak_point_fails(p, b, e, Condition::kFirst)
             || pak_point_fails(p, b, e, Condition::kThird);
    });
  }

  switch (w.condition) {
  case Condition::kFirst: {
    if (w.points.empty())
      return false;
    for (PointIndex z: w.points) {
      bool in_union = std::any_of(fiber.begin(), fiber.end(),
                                  [&](PointIndex e) { return src.adjeq(z, e); });
      bool in_preimage = tgt.adjeq(p(z), b);
      bool violates = pak ? (in_union && !in_preimage)
                          : (in_union != in_preimage);
      if (!violates)
        return false;
    }
    return true;
  }
  case Condition::kSecond: {
    if (w.points.size() != 3)
      return false;
    const PointIndex ei = w.points[0], ej = w.points[1], z = w.points[2];
    return ei != ej && p(ei) == b && p(ej) == b && src.adjeq(z, ei)
           && src.adjeq(z, ej);
  }
  case Condition::kThird: {
    if (w.points.size() != 1 || p(w.points[0]) != b)
      return false;
    const IndexSet nbhd = src.closed_neighborhood(w.points[0]);
    const IndexSet base_nbhd = tgt.closed_neighborhood(b);
    switch (v.kind) {
    case MorphismClass::kCovering:
      return !restriction_is_iso_onto(p, nbhd, base_nbhd);
    case MorphismClass::kHanPseudo:
      if (!is_subset(p.image_of(nbhd), base_nbhd))
        return true;
      return !check_wl_iso(restrict_to(p, nbhd, base_nbhd)).holds;
    case MorphismClass::kPakPseudo:
      return !restriction_is_iso_onto_image(p, nbhd);
    default:
      return false;
    }
  }
  default:
    return false;
  }
}

} // namespace

bool replay_violation(const DigitalMap &p, const ClassVerdict &verdict,
                      const PakOptions &options) {
  const Violation *w = verdict.violation();
  if (verdict.holds || w == nullptr)
    return false;
  const auto &src = p.source();
  const auto &tgt = p.target();
  // A witness citing points outside this map reproduces nothing.
  const int at_bound =
      w->anchor == Violation::Anchor::kSource ? src.size() : tgt.size();
  if (w->at < 0 || w->at >= at_bound)
    return false;
  for (PointIndex z: w->points)
    if (z < 0 || z >= src.size())
      return false;

  switch (w->condition) {
  case Condition::kContinuity:
    return w->points.size() == 1 && src.adjacent(w->at, w->points[0])
           && !tgt.adjeq(p(w->at), p(w->points[0]));
  case Condition::kSurjectivity:
    return p.fiber(w->at).empty();
  default:
    break;
  }

  if (w->anchor == Violation::Anchor::kBase)
    return replay_base_condition(p, verdict, *w, options);

  const PointIndex x = w->at;
  if (x < 0 || x >= src.size())
    return false;
  const IndexSet nbhd = src.closed_neighborhood(x);
  switch (verdict.kind) {
  case MorphismClass::kLocalIso:
    return !restriction_is_iso_onto(p, nbhd, tgt.closed_neighborhood(p(x)));
  case MorphismClass::kPLIso:
    return !isomorphic_images(SubImage(p.target_ptr(), p.image_of(nbhd)).to_image(),
                              SubImage(p.target_ptr(),
                                       tgt.closed_neighborhood(p(x)))
                                  .to_image());
  case MorphismClass::kWLIso:
    return !restriction_is_iso_onto_image(p, nbhd);
  default:
    return false;
  }
}

namespace {

nlohmann::json condition_to_json(Condition c) {
  switch (c) {
  case Condition::kContinuity:
    return "continuity";
  case Condition::kSurjectivity:
    return "surjectivity";
  case Condition::kFirst:
    return 1;
  case Condition::kSecond:
    return 2;
  case Condition::kThird:
    return 3;
  }
  return nullptr;
}

} // namespace

nlohmann::json verdict_to_json(const ClassVerdict &verdict) {
  nlohmann::json j;
  j["kind"] = class_name(verdict.kind);
  j["holds"] = verdict.holds;
  j["continuous"] = verdict.continuous;
  j["surjective"] = verdict.surjective;
  if (const Violation *w = verdict.violation()) {
    nlohmann::json wj;
    wj[w->anchor == Violation::Anchor::kBase ? "base" : "source"] = w->at;
    wj["condition"] = condition_to_json(w->condition);
    wj["points"] = w->points;
    j["witness"] = std::move(wj);
  } else {
    auto records = nlohmann::json::array();
    for (const auto &rec: std::get<Decomposition>(verdict.witness)) {
      records.push_back({{"base", rec.base},
                         {"sheets", rec.sheets},
                         {"neighborhoods", rec.neighborhoods}});
    }
    j["witness"] = {{"decomposition", std::move(records)}};
  }
  return j;
}

} // namespace digicover
