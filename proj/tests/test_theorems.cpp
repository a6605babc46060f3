#include "doctest.h"
#include "lozenge/json_io.hpp"
#include "lozenge/theorems.hpp"

using namespace lozenge;

namespace {

const ShuffleInstance kExample{1, 1, {1, 3}, {2}, {2, 3}, {1}, {}};
const ShuffleInstance kIdentity{2, 1, {1, 3}, {3}, {1, 3}, {3}, {}};
// Standard worked region with its up-dent at 2 moved to D.
const ShuffleInstance kReferenceFlip{4, 3, {2, 4, 5, 8, 11}, {4, 9, 11, 12}, {4, 5, 8, 11}, {2, 4, 9, 11, 12}, {6, 13}};

}  // namespace

TEST_CASE("same-size shuffles and pair products") {
  const CheckReport id = check_thm1(kIdentity);
  CHECK(id.pass);
  CHECK(id.rhs == "1");
  const CheckReport ex = check_thm1(kExample);
  CHECK(ex.pass);
  CHECK(ex.lhs == "2");
  CHECK(ex.rhs == "2");
  CHECK(check_thm1(kExample, {Engine::brute}).pass);
  CHECK(check_pair_product(kExample).pass);
  const CheckReport idp = check_pair_product(kIdentity);
  CHECK(idp.lhs == idp.rhs);
  CHECK(check_pair_product({3, 0, {1, 4}, {2}, {2, 4}, {1}, {}}).pass);

  // Harness self-test: a doubled right-hand side must be rejected.
  const CheckReport bad = check_ratio_identity("corrupt", {}, 2, 1, shuffle_rhs(kExample) * 2);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("flip shuffles and the PP reading") {
  CHECK(check_thm2(kExample).pass);
  CHECK(check_thm2(kExample).lhs == check_thm1(kExample).lhs);
  const CheckReport fig = check_thm2(kReferenceFlip);
  CHECK(fig.pass);
  CHECK_FALSE(check_thm2(kReferenceFlip, PpReading::literal).pass);

  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const ShuffleInstance t1 = random_shuffle_instance(rng, 9, ShuffleShape::theorem1, 2);
    CHECK(check_thm2(t1).pass == check_thm1(t1).pass);
  }
}

TEST_CASE("barrier independence") {
  ShuffleInstance base = kReferenceFlip;
  base.B.clear();
  CHECK(check_barrier_independence(base, {{}, {6}, {6, 13}}).pass);
  CHECK(check_barrier_independence(base, {{6}, {6}}).pass);
  CHECK_THROWS_AS(check_barrier_independence(base, {{4}}), Error);
}

TEST_CASE("q-weighted shuffles") {
  const CheckReport id = check_thm3(kIdentity);
  CHECK(id.pass);
  CHECK(id.extra["printed_C"] == 0);

  const ShuffleInstance small{2, 1, {1, 2}, {}, {1}, {2}, {}};
  const CheckReport ok = check_thm3(small, {}, {Engine::brute});
  CHECK(ok.pass);
  CHECK(ok.extra["q1_shadow_pass"] == true);
  // Both down-dent sets there have fewer than two elements, so the bracket
  // reading only shows up once |D| >= 2.
  const QShuffleOptions gap{QBracketReading::integer_gap, ExponentReading::derived};
  CHECK(check_thm3(small, gap, {Engine::brute}).pass);
  const ShuffleInstance wide{2, 1, {3}, {1, 2}, {1}, {2, 3}, {}};
  CHECK(check_thm3(wide, {}, {Engine::brute}).pass);
  CHECK_FALSE(check_thm3(wide, gap, {Engine::brute}).pass);

  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const ShuffleInstance g = random_shuffle_instance(rng, 9, ShuffleShape::general, 2);
    const CheckReport r = check_thm3(g);
    CHECK(r.pass);
    CHECK(r.extra["q1_shadow_pass"] == check_thm2(g).pass);
    // On instances that keep the dent counts both exponent readings agree.
    if (g.U.size() == g.U_prime.size() && g.D.size() == g.D_prime.size()) {
      CHECK(r.extra["printed_C"] == r.extra["derived_C"]);
    }
  }
}

TEST_CASE("condensation") {
  const CheckReport hand = check_kuo({1, 1, {}, {}, {}}, {Engine::brute});
  CHECK(hand.pass);
  CHECK(hand.instance["alpha"] == 1);
  CHECK(hand.instance["beta"] == 2);
  CHECK(check_kuo({1, 1, {}, {}, {}}).lhs == hand.lhs);

  try {
    check_kuo({1, 1, {}, {}, {1}});
    FAIL("expected NoDistinctAlphaBeta");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoDistinctAlphaBeta);
  }
  CHECK_THROWS_AS(check_kuo({2, 0, {}, {}, {}}), Error);

  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const RegionSpec s = random_kuo_spec(rng, 10, 2);
    CHECK(s.x > static_cast<int>(s.B.size()));
    CHECK(s.y >= 1);
    const CheckReport r = check_kuo(s);
    CHECK(r.pass);
    CHECK(r.extra["q1_shadow_pass"] == true);
  }
}

TEST_CASE("Schur sum") {
  const CheckReport h = check_schur_sum({1, 1, {}, {}, {}});
  CHECK(h.pass);
  CHECK(h.rhs == "2");
  CHECK(check_schur_sum({3, 0, {1, 3}, {2}, {}}).pass);
  CHECK_THROWS_AS(check_schur_sum({2, 1, {}, {}, {1}}), Error);
}

TEST_CASE("asymptotic tables") {
  using enum Token;
  const ClusterSpec c{{{up, down}, {up}}, {2}};
  const ClusterSpec c2{{{down, up}, {up}}, {2}};
  const AsymTable same = asym_table(c, c, 1, 1, 4);
  CHECK(same.limit == 1);
  CHECK(rows_equal_limit(same));
  CHECK(same.rows.size() == 4);

  const AsymTable t = asym_table(c, c2, 1, 1, 6);
  CHECK(t.limit == asym_rhs(c, c2));
  REQUIRE(t.rows.size() == 6);
  for (const AsymRow& r : t.rows) {
    CHECK(r.ratio_over_limit == r.ratio / t.limit);
    CHECK(r.deviation == abs(r.ratio_over_limit - 1));
  }
  CHECK(t.rows.back().deviation < t.rows.front().deviation);

  const ClusterSpec mid{{{}, {up, down, up}, {}}, {1, 1}};
  const ClusterSpec mid2{{{}, {up, up, down}, {}}, {1, 1}};
  CHECK(rows_equal_limit(asym_table(mid, mid2, 1, 1, 5)));

  CHECK_THROWS_AS(asym_table(c, {{{up}, {up, down}}, {2}}, 1, 1, 2), Error);
  CHECK_THROWS_AS(asym_table(c, {{{down, down}, {up}}, {2}}, 1, 1, 2), Error);
  try {
    asym_table(c, c2, 1, 1, 6, 100);
    FAIL("expected TermBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TermBudgetExceeded);
  }
}

TEST_CASE("random generators") {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const int v = uniform_int(rng, -3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 50; ++i) {
    const ShuffleInstance x = random_shuffle_instance(a, 10, ShuffleShape::general, 2);
    const ShuffleInstance y = random_shuffle_instance(b, 10, ShuffleShape::general, 2);
    CHECK(to_json(x) == to_json(y));
    CHECK_NOTHROW(validate_shuffle(x, false));
    CHECK(static_cast<int>(x.B.size()) <= 2);
  }
  for (int i = 0; i < 50; ++i) {
    const ShuffleInstance t = random_shuffle_instance(a, 10, ShuffleShape::theorem1, 0);
    CHECK_NOTHROW(validate_shuffle(t, true));
    const RegionSpec s = random_small_spec(a, 8);
    CHECK(build_region(validate_spec(s)).size() <= 120);
  }
}

TEST_CASE("corpus") {
  const std::vector<RegionSpec> all = small_corpus({4, 1, 1, 1, 1});
  CHECK_FALSE(all.empty());
  for (const RegionSpec& s : all) CHECK_NOTHROW(validate_spec(s));
  const auto sample = sample_corpus(all, 5, 10);
  CHECK(sample.size() == 10);
  CHECK(sample_corpus(all, 5, 10) == sample);
  CHECK(sample_corpus(all, 5, 0).size() == all.size());
}

TEST_CASE("suites") {
  SuiteOptions o;
  o.count = 5;
  o.max_L = 8;
  for (Suite s : {Suite::thm1, Suite::thm2, Suite::thm3, Suite::kuo, Suite::schur, Suite::barrier, Suite::asym}) {
    CHECK(parse_suite(suite_name(s)) == s);
    const SuiteResult r = run_suite(s, o);
    CHECK(r.failed() == 0);
    CHECK(r.first_failure() == nullptr);
  }
  CHECK_FALSE(parse_suite("nope"));

  const SuiteResult t1 = run_suite(Suite::thm1, o);
  CHECK(t1.controls_rejected() == t1.controls.size());
  CHECK(suite_summary(t1)["failed"] == 0);

  // Reports are identical whatever the worker count.
  o.count = 0;
  std::string serial;
  std::string parallel;
  for (const CheckReport& r : run_suite(Suite::all, o).reports) serial += to_json_line(r) + "\n";
  o.jobs = 6;
  for (const CheckReport& r : run_suite(Suite::all, o).reports) parallel += to_json_line(r) + "\n";
  CHECK(serial == parallel);
}

TEST_CASE("summary names the first failure") {
  SuiteResult r;
  CheckReport good;
  good.name = "good";
  good.pass = true;
  CheckReport bad;
  bad.name = "bad";
  r.reports = {good, bad};
  const nlohmann::json s = suite_summary(r);
  CHECK(s["failed"] == 1);
  CHECK(s["first_failure"]["name"] == "bad");
  CHECK(to_json_line(good).find("elapsed") == std::string::npos);
  CHECK(to_json_line(good, true).find("elapsed_ms") != std::string::npos);
}
