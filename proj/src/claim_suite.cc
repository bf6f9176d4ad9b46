//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/claim_suite.h"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace digicover {

DigitalMap build_window_map(int n, int q) {
  if (n < 4 || q < 2)
    throw std::invalid_argument("window map: requires n >= 4 and q >= 2");
  auto window = share(gen_window(q, n));
  auto curve = share(gen_cycle(n));
  // Both images hold consecutive integers starting at 0, so a point's index
  // is its coordinate.
  std::vector<PointIndex> a(window->size());
  for (PointIndex z = 0; z < window->size(); ++z)
    a[z] = z % n;
  return DigitalMap(window, curve, std::move(a));
}

DigitalMap build_doubling_map(int n) {
  auto cover = share(gen_cycle(2 * n));
  auto curve = share(gen_cycle(n));
  std::vector<PointIndex> a(cover->size());
  for (PointIndex z = 0; z < cover->size(); ++z)
    a[z] = z % n;
  return DigitalMap(cover, curve, std::move(a));
}

AssertionReport check_fiber_union_assertion(int n, int q) {
  if (n < 4 || q < 3)
    throw std::invalid_argument("assertion check: requires n >= 4, q >= 3");
  const DigitalMap p = build_window_map(n, q);
  const auto &window = p.source();
  const IndexSet &flagged = window.boundary();

  AssertionReport report {n, q, {}, AssertionVerdict::kAssertionFails};
  bool clean_disagreement = false, tainted_disagreement = false;
  for (PointIndex b = 0; b < p.target().size(); ++b) {
    AssertionRow row;
    row.base = b;
    for (PointIndex e: p.fiber(b)) {
      IndexSet merged;
      IndexSet nbhd = window.closed_neighborhood(e);
      std::set_union(row.lhs.begin(), row.lhs.end(), nbhd.begin(), nbhd.end(),
                     std::back_inserter(merged));
      row.lhs = std::move(merged);
    }
    row.rhs = p.preimage(p.target().closed_neighborhood(b));
    std::set_symmetric_difference(row.lhs.begin(), row.lhs.end(),
                                  row.rhs.begin(), row.rhs.end(),
                                  std::back_inserter(row.diff));
    std::set_difference(row.diff.begin(), row.diff.end(), flagged.begin(),
                        flagged.end(), std::back_inserter(row.interior_diff));
    row.equal = row.interior_diff.empty();
    row.boundary_tainted = row.interior_diff.size() != row.diff.size();

    if (!row.equal) {
      (row.boundary_tainted ? tainted_disagreement : clean_disagreement) = true;
    }
    report.rows.push_back(std::move(row));
  }

  if (clean_disagreement)
    report.verdict = AssertionVerdict::kAssertionHolds;
  else if (tainted_disagreement)
    report.verdict = AssertionVerdict::kInconclusive;
  return report;
}

bool WlGapReport::gap_exhibited() const {
  const bool witness_ok = !witness_path || witness_lifts == 0;
  return wl_iso.holds && surjective && !han_pseudo.holds && witness_ok
         && ulp.status == UlpStatus::kFails;
}

WlGapReport verify_wl_gap(const DigitalMap &p,
                          std::optional<PointSeq> witness_path,
                          PointIndex witness_start) {
  WlGapReport r {check_wl_iso(p), is_surjective(p), check_han_pseudocover(p),
                 std::move(witness_path), witness_start, 0, {}};
  if (r.witness_path)
    r.witness_lifts = enumerate_lifts(p, *r.witness_path, witness_start).size();
  r.ulp = check_unique_path_lifting(
      p, 2 * std::max(p.source().size(), p.target().size()));
  return r;
}

WlGapReport verify_wl_gap(int n, int q) {
  // c_i has index i in the curve.
  return verify_wl_gap(build_window_map(n, q), PointSeq {0, n - 1}, 0);
}

SeparationReport verify_pseudocover_separation(const DigitalMap &p,
                                               const PakOptions &options) {
  return {check_pak_pseudocover(p, options), check_covering(p)};
}

SeparationReport verify_pseudocover_separation(int n, int q,
                                               const PakOptions &options) {
  return verify_pseudocover_separation(build_window_map(n, q), options);
}

SuiteReport run_claim_suite(const SuiteOptions &options) {
  SuiteReport report;
  for (int n: options.ns) {
    for (int q: options.qs) {
      SuiteEntry entry {n, q, std::nullopt, verify_wl_gap(n, q),
                        verify_pseudocover_separation(n, q, options.pak)};
      if (q >= 3)
        entry.assertion = check_fiber_union_assertion(n, q);
      report.entries.push_back(std::move(entry));
    }
  }
  report.identity_control =
      verify_wl_gap(identity_map(share(gen_cycle(4))), std::nullopt, 0);
  report.doubling_control =
      verify_pseudocover_separation(build_doubling_map(4), options.pak);
  report.equivalences = run_equivalence_harness(options.harness);
  return report;
}

bool SuiteReport::reproduced() const {
  for (const auto &e: entries) {
    if (!e.wl_gap.gap_exhibited() || !e.separation.separated())
      return false;
  }
  const auto &id = identity_control;
  if (!id.wl_iso.holds || !id.han_pseudo.holds || !id.ulp.holds())
    return false;
  if (!doubling_control.pak_pseudo.holds || !doubling_control.covering.holds)
    return false;
  return equivalences.divergences.empty() && equivalences.replay_failures == 0;
}

std::string_view verdict_name(AssertionVerdict v) {
  switch (v) {
  case AssertionVerdict::kAssertionHolds:
    return "assertion_holds_on_window";
  case AssertionVerdict::kAssertionFails:
    return "assertion_fails_on_window";
  case AssertionVerdict::kInconclusive:
    return "inconclusive";
  }
  return "unknown";
}

nlohmann::json assertion_to_json(const AssertionReport &report) {
  auto rows = nlohmann::json::array();
  for (const auto &r: report.rows) {
    rows.push_back({{"base", r.base},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"diff", r.diff},
                    {"interior_diff", r.interior_diff},
                    {"equal", r.equal},
                    {"boundary_tainted", r.boundary_tainted}});
  }
  return {{"claim", "Assertion 3.10-1"},
          {"n", report.n},
          {"q", report.q},
          {"rows", std::move(rows)},
          {"verdict", verdict_name(report.verdict)}};
}

nlohmann::json wl_gap_to_json(const WlGapReport &r) {
  nlohmann::json j {{"claim", "Corollary 3.11"},
                    {"wl_iso", verdict_to_json(r.wl_iso)},
                    {"surjective", r.surjective},
                    {"han_pseudo", verdict_to_json(r.han_pseudo)},
                    {"ulp", ulp_to_json(r.ulp)},
                    {"gap_exhibited", r.gap_exhibited()}};
  if (r.witness_path) {
    j["witness"] = {{"base_path", *r.witness_path},
                    {"start", r.witness_start},
                    {"lift_count", r.witness_lifts}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::json separation_to_json(const SeparationReport &r) {
  return {{"claim", "Pakdaman separation"},
          {"pak_pseudo", verdict_to_json(r.pak_pseudo)},
          {"covering", verdict_to_json(r.covering)},
          {"separated", r.separated()}};
}

nlohmann::json suite_to_json(const SuiteReport &report) {
  auto entries = nlohmann::json::array();
  for (const auto &e: report.entries) {
    entries.push_back(
        {{"n", e.n},
         {"q", e.q},
         {"assertion",
          e.assertion ? assertion_to_json(*e.assertion) : nlohmann::json()},
         {"corollary", wl_gap_to_json(e.wl_gap)},
         {"separation", separation_to_json(e.separation)}});
  }
  return {{"entries", std::move(entries)},
          {"controls",
           {{"identity_c4", wl_gap_to_json(report.identity_control)},
            {"doubling_c8_c4", separation_to_json(report.doubling_control)}}},
          {"equivalences", harness_to_json(report.equivalences)},
          {"reproduced", report.reproduced()}};
}

namespace {

const char *yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const IndexSet &s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0)
      out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

} // namespace

std::string suite_to_text(const SuiteReport &report) {
  std::ostringstream os;
  for (const auto &e: report.entries) {
    os << "n=" << e.n << " q=" << e.q << "\n";
    const auto &g = e.wl_gap;
    os << "  Corollary 3.11: wl_iso=" << yes_no(g.wl_iso.holds)
       << " surjective=" << yes_no(g.surjective)
       << " han_pseudo=" << yes_no(g.han_pseudo.holds)
       << " witness_lifts=" << g.witness_lifts
       << " ulp=" << (g.ulp.holds() ? "holds" : "fails")
       << " -> " << (g.gap_exhibited() ? "reproduced" : "NOT reproduced")
       << "\n";
    const auto &s = e.separation;
    os << "  Pakdaman separation: pak_pseudo=" << yes_no(s.pak_pseudo.holds)
       << " covering=" << yes_no(s.covering.holds) << " -> "
       << (s.separated() ? "reproduced" : "NOT reproduced") << "\n";
    if (e.assertion) {
      os << "  Assertion 3.10-1 (adjudication): "
         << verdict_name(e.assertion->verdict) << "\n";
      for (const auto &r: e.assertion->rows) {
        os << "    b=c" << r.base << " equal=" << yes_no(r.equal)
           << " tainted=" << yes_no(r.boundary_tainted)
           << " diff=" << join(r.diff) << "\n";
      }
    }
  }
  os << "control identity C4: wl_iso="
     << yes_no(report.identity_control.wl_iso.holds)
     << " han_pseudo=" << yes_no(report.identity_control.han_pseudo.holds)
     << " ulp=" << (report.identity_control.ulp.holds() ? "holds" : "fails")
     << "\n";
  os << "control doubling C8->C4: pak_pseudo="
     << yes_no(report.doubling_control.pak_pseudo.holds)
     << " covering=" << yes_no(report.doubling_control.covering.holds) << "\n";
  const auto &h = report.equivalences;
  os << "Theorem 3.5 harness: " << h.instances << " instances, "
     << h.divergences.size() << " divergences, " << h.replay_failures
     << " replay failures\n";
  os << "reproduced: " << yes_no(report.reproduced()) << "\n";
  return os.str();
}

} // namespace digicover
