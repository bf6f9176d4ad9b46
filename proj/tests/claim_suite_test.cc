//
// Project Digicover
// SPDX-License-Identifier: Apache-2.0
//

#include "digicover/claim_suite.h"

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

namespace digicover {
namespace {

// Window rows by integer arithmetic alone: on [0, qn], N(z) is
// {z-1, z, z+1} clipped to the window and z lies over c_{z mod n}.
struct ArithmeticRow {
  std::set<int> lhs, rhs;
};

ArithmeticRow arithmetic_row(int n, int q, int b) {
  ArithmeticRow r;
  const int last = q * n;
  for (int z = 0; z <= last; ++z) {
    if (z % n == b) {
      for (int d = -1; d <= 1; ++d)
        if (z + d >= 0 && z + d <= last)
          r.lhs.insert(z + d);
    }
    const int off = ((z % n) - b + n) % n;
    if (off == 0 || off == 1 || off == n - 1)
      r.rhs.insert(z);
  }
  return r;
}

std::set<int> as_set(const IndexSet &s) { return {s.begin(), s.end()}; }

TEST(WindowMap, Examples) {
  const auto p = build_window_map(4, 3);
  EXPECT_EQ(p.source().size(), 13);
  EXPECT_EQ(p.target().label(p(5)), "c1");
  EXPECT_EQ(p.target().label(p(0)), "c0");
  EXPECT_EQ(p.target().label(p(12)), "c0");
  EXPECT_TRUE(is_continuous(build_window_map(5, 2)));
  for (int n: {4, 5, 6, 8})
    for (int q: {2, 3}) {
      const auto m = build_window_map(n, q);
      EXPECT_TRUE(is_continuous(m));
      EXPECT_TRUE(is_surjective(m));
    }
  EXPECT_THROW(build_window_map(3, 3), std::invalid_argument);
  EXPECT_THROW(build_window_map(4, 1), std::invalid_argument);
}

TEST(DoublingMap, Shape) {
  const auto d = build_doubling_map(4);
  EXPECT_EQ(d.source().size(), 8);
  EXPECT_EQ(d.target().size(), 4);
  EXPECT_EQ(d.fiber(1), (IndexSet {1, 5}));
}

TEST(Assertion, RowFactsForFourByThree) {
  const auto r = check_fiber_union_assertion(4, 3);
  ASSERT_EQ(r.rows.size(), 4u);

  const auto &c3 = r.rows[3];
  EXPECT_EQ(c3.base, 3);
  EXPECT_TRUE(as_set(c3.rhs).count(0));
  // N(3) = {2,3,4}, N(7) = {6,7,8}, N(11) = {10,11,12}.
  EXPECT_EQ(as_set(c3.lhs), (std::set<int> {2, 3, 4, 6, 7, 8, 10, 11, 12}));
  EXPECT_FALSE(as_set(c3.lhs).count(0));
  EXPECT_FALSE(c3.equal);
  EXPECT_FALSE(c3.boundary_tainted);
  EXPECT_TRUE(as_set(c3.diff).count(0));

  const auto &c1 = r.rows[1];
  EXPECT_EQ(as_set(c1.lhs), (std::set<int> {0, 1, 2, 4, 5, 6, 8, 9, 10}));
  EXPECT_TRUE(c1.equal);

  const auto &c0 = r.rows[0];
  EXPECT_EQ(as_set(c0.lhs), (std::set<int> {0, 1, 3, 4, 5, 7, 8, 9, 11, 12}));
  EXPECT_TRUE(c0.equal);
  EXPECT_TRUE(c0.diff.empty());
}

TEST(Assertion, RowsMatchArithmeticOracle) {
  for (int n: {4, 5, 6, 7, 8, 10}) {
    for (int q: {3, 4}) {
      const auto r = check_fiber_union_assertion(n, q);
      ASSERT_EQ(static_cast<int>(r.rows.size()), n);
      const std::set<int> flagged {q * n - 1, q * n};
      bool clean_unequal = false, tainted_unequal = false;
      for (int b = 0; b < n; ++b) {
        const auto &row = r.rows[b];
        const auto want = arithmetic_row(n, q, b);
        EXPECT_EQ(as_set(row.lhs), want.lhs);
        EXPECT_EQ(as_set(row.rhs), want.rhs);

        std::set<int> diff, interior;
        for (int z: want.lhs)
          if (!want.rhs.count(z))
            diff.insert(z);
        for (int z: want.rhs)
          if (!want.lhs.count(z))
            diff.insert(z);
        bool tainted = false;
        for (int z: diff) {
          if (flagged.count(z))
            tainted = true;
          else
            interior.insert(z);
        }
        EXPECT_EQ(as_set(row.diff), diff);
        EXPECT_EQ(as_set(row.interior_diff), interior);
        EXPECT_EQ(row.boundary_tainted, tainted);
        EXPECT_EQ(row.equal, interior.empty());
        // Continuity puts every sheet neighborhood inside the preimage.
        EXPECT_TRUE(std::includes(want.rhs.begin(), want.rhs.end(),
                                  want.lhs.begin(), want.lhs.end()));
        if (!row.equal)
          (tainted ? tainted_unequal : clean_unequal) = true;
        if (b == n - 1) {
          EXPECT_FALSE(row.boundary_tainted);
          EXPECT_EQ(diff, (std::set<int> {0}));
        }
      }
      const auto expect = clean_unequal     ? AssertionVerdict::kAssertionHolds
                          : tainted_unequal ? AssertionVerdict::kInconclusive
                                            : AssertionVerdict::kAssertionFails;
      EXPECT_EQ(r.verdict, expect);
    }
  }
  EXPECT_THROW(check_fiber_union_assertion(4, 2), std::invalid_argument);
  EXPECT_THROW(check_fiber_union_assertion(3, 3), std::invalid_argument);
}

TEST(WlGap, GridPattern) {
  for (int n: {4, 5, 6, 8}) {
    for (int q: {2, 3}) {
      const auto g = verify_wl_gap(n, q);
      EXPECT_TRUE(g.wl_iso.holds);
      EXPECT_TRUE(g.surjective);
      EXPECT_FALSE(g.han_pseudo.holds);
      EXPECT_EQ(g.witness_lifts, 0u);
      EXPECT_EQ(g.ulp.status, UlpStatus::kFails);
      ASSERT_TRUE(g.ulp.counterexample);
      EXPECT_EQ(g.ulp.counterexample->base_path, (PointSeq {0, n - 1}));
      EXPECT_EQ(g.ulp.counterexample->start, 0);
      EXPECT_EQ(g.ulp.counterexample->lift_count, 0u);
      EXPECT_TRUE(g.gap_exhibited());
    }
  }
}

TEST(WlGap, IdentityControl) {
  const auto g =
      verify_wl_gap(identity_map(share(gen_cycle(4))), std::nullopt, 0);
  EXPECT_TRUE(g.wl_iso.holds);
  EXPECT_TRUE(g.han_pseudo.holds);
  EXPECT_TRUE(g.ulp.holds());
  EXPECT_FALSE(g.gap_exhibited());
}

TEST(Separation, GridPatternAndControl) {
  for (int n: {4, 5, 6, 8}) {
    for (int q: {2, 3}) {
      const auto s = verify_pseudocover_separation(n, q);
      EXPECT_TRUE(s.pak_pseudo.holds);
      EXPECT_FALSE(s.covering.holds);
      EXPECT_TRUE(s.separated());
      EXPECT_TRUE(verify_pseudocover_separation(n, q, {true, false}).separated());
    }
  }
  const auto w = verify_pseudocover_separation(4, 3);
  EXPECT_EQ(w.covering.violation()->at, 0);
  EXPECT_EQ(w.covering.violation()->points, (std::vector<int> {0}));

  const auto d = verify_pseudocover_separation(build_doubling_map(4));
  EXPECT_TRUE(d.pak_pseudo.holds);
  EXPECT_TRUE(d.covering.holds);
  EXPECT_FALSE(d.separated());
}

TEST(Suite, ReproducedAndDeterministic) {
  SuiteOptions opts;
  const auto a = run_claim_suite(opts);
  EXPECT_TRUE(a.reproduced());
  EXPECT_EQ(a.entries.size(), 8u);
  const auto ja = suite_to_json(a);
  EXPECT_EQ(ja.dump(), suite_to_json(run_claim_suite(opts)).dump());
  EXPECT_EQ(suite_to_text(a), suite_to_text(run_claim_suite(opts)));

  for (const auto &e: ja["entries"]) {
    if (e["q"] == 2)
      EXPECT_TRUE(e["assertion"].is_null());
    else
      EXPECT_EQ(e["assertion"]["claim"], "Assertion 3.10-1");
    EXPECT_EQ(e["corollary"]["claim"], "Corollary 3.11");
    EXPECT_EQ(e["separation"]["claim"], "Pakdaman separation");
  }
  EXPECT_EQ(ja["equivalences"]["claim"], "Theorem 3.5");
  EXPECT_EQ(ja["reproduced"], true);

  const auto text = suite_to_text(a);
  for (const char *label: {"Assertion 3.10-1", "Corollary 3.11", "Theorem 3.5"})
    EXPECT_NE(text.find(label), std::string::npos) << label;
}

TEST(Suite, AdjudicationRowsNeverFailTheRun) {
  SuiteOptions opts;
  opts.ns = {4};
  opts.qs = {3};
  const auto r = run_claim_suite(opts);
  ASSERT_TRUE(r.entries[0].assertion);
  // Whatever the verdict, reproduction is decided by the other claims.
  auto copy = r;
  copy.entries[0].assertion->verdict = AssertionVerdict::kAssertionFails;
  EXPECT_EQ(copy.reproduced(), r.reproduced());
}

} // namespace
} // namespace digicover
