#include "doctest.h"
#include "lozenge/formulas.hpp"
#include "lozenge/theorems.hpp"
#include "oracles.hpp"

using namespace lozenge;

namespace {

/// Plane partitions in an a x b x c box counted by volume.
oracle::Sparse plane_partitions_by_volume(int a, int b, int c) {
  std::vector<int> cell(static_cast<std::size_t>(a * b), 0);
  oracle::Sparse total;
  std::function<void(int, int)> fill = [&](int k, int volume) {
    if (k == a * b) {
      total[volume] += 1;
      return;
    }
    const int i = k / b;
    const int j = k % b;
    int hi = c;
    if (i > 0) hi = std::min(hi, cell[static_cast<std::size_t>((i - 1) * b + j)]);
    if (j > 0) hi = std::min(hi, cell[static_cast<std::size_t>(k - 1)]);
    for (int v = 0; v <= hi; ++v) {
      cell[static_cast<std::size_t>(k)] = v;
      fill(k + 1, volume + v);
    }
  };
  fill(0, 0);
  return total;
}

std::vector<Positions> subsets_of_range(int L) {
  std::vector<Positions> out;
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    Positions p;
    for (int k = 0; k < L; ++k) {
      if (mask & (1u << k)) p.push_back(k + 1);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("plane partitions in a box") {
  CHECK(pp(1, 1, 1) == 2);
  CHECK(pp(2, 2, 2) == 20);
  CHECK(pp(0, 3, 3) == 1);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int c = 0; c <= 3; ++c) {
        CHECK(pp(a, b, c) == oracle::plane_partitions(a, b, c));
        CHECK(oracle::from(pp_q(a, b, c)) == plane_partitions_by_volume(a, b, c));
      }
    }
  }
}

TEST_CASE("products over positions") {
  CHECK(delta({}) == 1);
  CHECK(delta({1, 3, 4}) == 6);
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(4) == 12);
  CHECK(delta({1, 2, 3, 4, 5}) == superfactorial(5));
  CHECK(qp_eval_one(delta_q({1, 3, 4}).shifted(0)) == 0);
  CHECK(delta_q({1, 3}) == QPoly::binomial_difference(3, 1));
}

TEST_CASE("semihexagon product matches Gelfand-Tsetlin counts") {
  CHECK(clp(SemihexSpec{1, 2, {3}}) == 1);
  CHECK(clp(Positions{2, 5}) == 3);
  CHECK_THROWS_AS(clp(SemihexSpec{2, 1, {1}}), Error);
  for (int L = 0; L <= 8; ++L) {
    for (const Positions& s : subsets_of_range(L)) {
      const Count expected = oracle::semihex_tilings(s);
      CHECK(clp(s) == expected);
      CHECK(qp_eval_one(clp_q(s)) == expected);
      CHECK(schur_ones(s) == expected);
    }
  }
}

TEST_CASE("semihexagon q-product weights") {
  // A single dent at s: the weight is q^{s-1}.
  for (int s = 1; s <= 6; ++s) CHECK(clp_q(Positions{s}) == QPoly::q_power(s - 1));
  CHECK(clp_q(SemihexSpec{1, 2, {3}}) == QPoly::q_power(2));
}

TEST_CASE("partitions and Schur specializations") {
  CHECK(lambda_of({2, 5}) == Partition{4, 2});
  CHECK(lambda_of({1, 2, 3}) == Partition{1, 1, 1});
  CHECK(lambda_of({}) == Partition{});
  const std::vector<Partition> shapes = {{}, {1}, {2, 1}, {3, 1, 1}, {2, 2}, {4, 2, 1}, {3, 3, 0}};
  for (const Partition& lam : shapes) {
    for (int len = static_cast<int>(lam.size()); len <= 4; ++len) {
      std::vector<int> top = lam;
      top.resize(static_cast<std::size_t>(len), 0);
      CHECK(schur_ones(lam, len) == oracle::gt_patterns(top));
    }
  }
}

TEST_CASE("shuffle ratio examples") {
  const ShuffleInstance ex{1, 1, {1, 3}, {2}, {2, 3}, {1}, {}};
  CHECK(shuffle_rhs(ex) == 2);
  CHECK(gen_shuffle_rhs(ex) == 2);
  const ShuffleInstance id{2, 1, {1, 3}, {3}, {1, 3}, {3}, {}};
  CHECK(shuffle_rhs(id) == 1);
  CHECK(qratio_eq(q_shuffle_rhs(id), QRatio(QPoly(1), QPoly(1))));
  CHECK(q_shuffle_exponent(id, ExponentReading::printed) == 0);
  CHECK_THROWS_AS(validate_shuffle({1, 1, {1, 3}, {2}, {2}, {1}, {}}, false), Error);
  CHECK_THROWS_AS(shuffle_rhs({1, 1, {1, 3}, {2}, {3}, {1, 2}, {}}), Error);
}

TEST_CASE("ratio properties on random instances") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const ShuffleInstance t1 = random_shuffle_instance(rng, 10, ShuffleShape::theorem1, 2);
    CHECK(shuffle_rhs(t1) * shuffle_rhs(t1.inverse()) == 1);
    CHECK(gen_shuffle_rhs(t1) == shuffle_rhs(t1));

    const ShuffleInstance g = random_shuffle_instance(rng, 10, ShuffleShape::general, 2);
    CHECK(gen_shuffle_rhs(g) * gen_shuffle_rhs(g.inverse()) == 1);
    if (g.D_prime.size() <= 1) {
      CHECK(gen_shuffle_rhs(g, PpReading::literal) == gen_shuffle_rhs(g));
    }
    const QRatio fwd = q_shuffle_rhs(g);
    const QRatio back = q_shuffle_rhs(g.inverse());
    CHECK(qratio_eq(QRatio(fwd.num() * back.num(), fwd.den() * back.den()), QRatio(QPoly(1), QPoly(1))));
  }
}

TEST_CASE("cluster limits") {
  using enum Token;
  const ClusterStats s = cluster_s_values({up, down, up});
  CHECK(s.s_plus == 2);
  CHECK(s.s_minus == 1);
  const ClusterSpec c{{{up, down}, {up}}, {2}};
  CHECK(asym_rhs(c, c) == 1);
  CHECK_THROWS_AS(asym_rhs(c, {{{up}, {up, down}}, {2}}), Error);
  CHECK_THROWS_AS(asym_rhs(c, {{{up, down}, {up}}, {3}}), Error);
  CHECK(asym_rhs({{{}, {up, down, up}, {}}, {1, 1}}, {{{}, {up, up, down}, {}}, {1, 1}}) == 2);
}
