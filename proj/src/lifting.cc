//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/lifting.h"

#include <stdexcept>

namespace digicover {

namespace {

void validate_base(const DigitalMap &p, const PointSeq &base,
                   PointIndex start) {
  if (base.empty())
    throw std::invalid_argument("lift: empty base path");
  if (!is_path(p.target(), base))
    throw std::invalid_argument("lift: base is not a path in the target");
  if (start < 0 || start >= p.source().size() || p(start) != base.front())
    throw std::invalid_argument("lift: start does not lie over base[0]");
}

// Points equal or adjacent to e that lie over b, ascending.
IndexSet lift_step(const DigitalMap &p, PointIndex e, PointIndex b) {
  IndexSet out;
  for (PointIndex x: p.source().closed_neighborhood(e)) {
    if (p(x) == b)
      out.push_back(x);
  }
  return out;
}

void extend(const DigitalMap &p, const PointSeq &base, PointSeq &current,
            std::vector<PathLift> &out) {
  if (current.size() == base.size()) {
    out.push_back(PathLift {base, current, current.front()});
    return;
  }
  for (PointIndex next: lift_step(p, current.back(), base[current.size()])) {
    current.push_back(next);
    extend(p, base, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<PathLift> enumerate_lifts(const DigitalMap &p,
                                      const PointSeq &base,
                                      PointIndex start) {
  validate_base(p, base, start);
  std::vector<PathLift> out;
  PointSeq current {start};
  extend(p, base, current, out);
  return out;
}

std::size_t count_lifts(const DigitalMap &p, const PointSeq &base,
                        PointIndex start) {
  validate_base(p, base, start);
  std::vector<std::size_t> ways(p.source().size(), 0);
  ways[start] = 1;
  for (std::size_t k = 1; k < base.size(); ++k) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (PointIndex e = 0; e < p.source().size(); ++e) {
      if (ways[e] == 0)
        continue;
      for (PointIndex x: lift_step(p, e, base[k]))
        next[x] += ways[e];
    }
    ways = std::move(next);
  }
  std::size_t total = 0;
  for (std::size_t w: ways)
    total += w;
  return total;
}

ULPReport check_unique_path_lifting(const DigitalMap &p, int max_length,
                                    const UlpOptions &options) {
  if (max_length < 1)
    throw std::invalid_argument("check_unique_path_lifting: max_length < 1");

  struct Entry {
    PointIndex start;
    PointSeq base;
    PointIndex end;
  };

  const auto &src = p.source();
  const auto &tgt = p.target();
  ULPReport report;
  report.max_length_checked = max_length;

  std::vector<char> seen(src.size(), 0);
  std::vector<Entry> level;
  for (PointIndex e = 0; e < src.size(); ++e) {
    level.push_back(Entry {e, {p(e)}, e});
    seen[e] = 1;
  }
  report.states_expanded = level.size();

  std::optional<LiftCounterexample> tainted;
  for (int length = 1; length <= max_length && !level.empty(); ++length) {
    std::vector<Entry> next;
    for (const Entry &entry: level) {
      const PointIndex b = entry.base.back();
      IndexSet steps = options.stuttering ? tgt.closed_neighborhood(b)
                                          : tgt.neighbors(b);
      for (PointIndex b2: steps) {
        IndexSet lifts = lift_step(p, entry.end, b2);
        if (lifts.size() == 1) {
          if (!seen[lifts.front()]) {
            seen[lifts.front()] = 1;
            PointSeq base = entry.base;
            base.push_back(b2);
            next.push_back(Entry {entry.start, std::move(base), lifts.front()});
          }
          continue;
        }

        LiftCounterexample cx;
        cx.base_path = entry.base;
        cx.base_path.push_back(b2);
        cx.start = entry.start;
        cx.lift_count = lifts.size();
        cx.lifts = enumerate_lifts(p, cx.base_path, cx.start);
        cx.frontier = entry.end;
        if (src.is_boundary(cx.frontier)) {
          if (!tainted)
            tainted = std::move(cx);
          continue;
        }
        report.status = UlpStatus::kFails;
        report.counterexample = std::move(cx);
        return report;
      }
    }
    report.states_expanded += next.size();
    level = std::move(next);
  }

  if (tainted) {
    report.status = UlpStatus::kInconclusive;
    report.counterexample = std::move(tainted);
  }
  return report;
}

nlohmann::json lift_to_json(const PathLift &lift) {
  return {{"base_path", lift.base_path},
          {"lift", lift.lift},
          {"start", lift.start}};
}

nlohmann::json ulp_to_json(const ULPReport &report) {
  nlohmann::json j;
  switch (report.status) {
  case UlpStatus::kHolds:
    j["holds"] = true;
    break;
  case UlpStatus::kFails:
    j["holds"] = false;
    break;
  case UlpStatus::kInconclusive:
    j["holds"] = "inconclusive";
    break;
  }
  j["max_length_checked"] = report.max_length_checked;
  j["states_expanded"] = report.states_expanded;
  if (report.counterexample) {
    const auto &cx = *report.counterexample;
    auto lifts = nlohmann::json::array();
    for (const auto &l: cx.lifts)
      lifts.push_back(l.lift);
    j["counterexample"] = {{"base_path", cx.base_path},
                           {"start", cx.start},
                           {"lift_count", cx.lift_count},
                           {"lifts", std::move(lifts)},
                           {"frontier", cx.frontier}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

} // namespace digicover
