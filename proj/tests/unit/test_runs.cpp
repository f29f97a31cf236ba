#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pnseq/errors.hpp"
#include "pnseq/generators.hpp"
#include "pnseq/runs.hpp"

using namespace pnseq;
using Lens = std::vector<std::size_t>;

namespace {

BipolarSequence seq(const oracle::Vec& v) { return BipolarSequence::from_ints(v); }

const oracle::Vec kN7 = {-1, -1, -1, 1, -1, 1, 1};
const oracle::Vec kN11 = {-1, -1, -1, 1, -1, -1, 1, -1, 1, 1, 1};

}  // namespace

TEST_CASE("decompose examples") {
  const auto r = decompose(seq(kN7));
  CHECK(r.run_lengths == Lens{3, 1, 1, 2});
  CHECK(r.gamma() == 4);
  const auto c = decompose(seq({1, 1, 1}));
  CHECK(c.gamma() == 1);
  CHECK(c.run_lengths == Lens{3});
  const auto e = decompose(seq(kN11));
  CHECK(e.gamma() == 6);
  CHECK(e.count(1) == 3);
  CHECK(e.count(3) == 2);
  CHECK(e.count(9) == 0);
}

TEST_CASE("run property check on the n=11 codeword") {
  const auto bounds = run_property_check(seq(kN11));
  REQUIRE(bounds.size() == 11);
  for (const auto& b : bounds) {
    CHECK(b.lower == (11u >> (b.f + 1)));
    if (b.f == 3) {
      CHECK_FALSE(b.pass);
      CHECK(b.count == 2);
    } else {
      CHECK(b.pass);
    }
  }
  CHECK(bounds[1].upper == 2);  // f = 2: ceil(11/8)
  CHECK(bounds[2].upper == 1);  // f = 3: ceil(11/16)
}

TEST_CASE("run property check on a constant sequence") {
  const auto bounds = run_property_check(seq(oracle::Vec(8, 1)));
  CHECK_FALSE(bounds[0].pass);  // N(R_1) = 0 < floor(8/4)
  CHECK(bounds[0].lower == 2);
  CHECK(bounds[7].count == 1);
  CHECK(bounds[7].pass);  // f = 8: 0 <= 1 <= ceil(8/512)
}

TEST_CASE("pattern_count") {
  const auto x = seq(kN7);
  const Lens p11 = {1, 1}, p1 = {1}, p3 = {3, 1, 1, 2, 3}, p31 = {3, 1};
  CHECK(pattern_count(x, p11) == 1);
  CHECK(pattern_count(x, p1) == 2);
  CHECK(pattern_count(x, p31) == 1);
  CHECK(pattern_count(x, p3) == 1);  // wraps around the run cycle
  const Lens too_long = {1, 1, 1, 1, 1, 1};
  CHECK(pattern_count(x, too_long) == 0);
  CHECK_THROWS_AS(pattern_count(x, Lens{}), DomainError);
  const Lens zero = {1, 0};
  CHECK_THROWS_AS(pattern_count(x, zero), DomainError);
}

TEST_CASE("run-by-run correlation examples") {
  const auto x = seq(kN7);
  CHECK(cai_autocorrelation(x, 3) == -1);
  CHECK(cai_autocorrelation(x, 1) == 7 - 2 * 4);
  CHECK_THROWS_AS(cai_autocorrelation(seq({1, 1, 1}), 1), DomainError);
  CHECK_THROWS_AS(cai_autocorrelation(x, 7), DomainError);
}

TEST_CASE("golomb report") {
  const auto m = golomb_report(m_sequence(3));
  CHECK((m.balance && m.run && m.ideal));
  const auto e = golomb_report(seq(kN11));
  CHECK((e.balance && !e.run && e.ideal));
  const auto c = golomb_report(seq({1, 1, 1}));
  CHECK((!c.balance && !c.run && !c.ideal));
}

TEST_CASE("property: decompose matches the scan oracle") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      const auto v = oracle::tuple(n, c);
      const auto r = decompose(seq(v));
      REQUIRE(r.run_lengths == oracle::run_lengths(v));
      std::size_t total = 0;
      for (std::size_t i = 0; i < r.gamma(); ++i) {
        total += r.run_lengths[i];
        if (r.gamma() >= 2) REQUIRE(r.run_values[i] != r.run_values[(i + 1) % r.gamma()]);
      }
      REQUIRE(total == n);
    }
}

TEST_CASE("property: runs are invariant under negation and rotation") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = seq(oracle::random_tuple(2 + trial % 30, rng));
    const auto h = decompose(x).histogram;
    CHECK(decompose(negate(x)).histogram == h);
    CHECK(decompose(cyclic_shift(x, trial % x.size())).histogram == h);
    CHECK(decompose(reverse(x)).histogram == h);
  }
}

TEST_CASE("run-by-run correlation on the tabulated sequences") {
  const std::vector<oracle::Vec> rows = {
      {1, 1, -1},
      {-1, -1, -1, 1, 1, -1, 1},
      {-1, -1, -1, 1, -1, 1, 1, -1, 1, 1, 1},
      {-1, -1, -1, -1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1},
      {-1, -1, -1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 1, 1, 1},
      {-1, -1, -1, -1, 1, -1, 1, -1, 1, 1, 1, 1, -1, -1, 1, -1, -1, 1, 1},
      {-1, -1, -1, -1, 1, -1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, 1},
      {1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1, 1, -1, -1, -1, -1, -1},
      {1, -1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1, -1},
  };
  for (const auto& v : rows) {
    const auto x = seq(v);
    for (std::size_t t = 0; t < v.size(); ++t) CHECK(cai_autocorrelation(x, t) == oracle::corr(v, t));
    CHECK(decompose(x).gamma() == (v.size() + 1) / 2);
  }
}

TEST_CASE("property: run-by-run correlation equals direct correlation up to n = 12") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      const auto v = oracle::tuple(n, c);
      const auto x = seq(v);
      const auto r = decompose(x);
      if (r.gamma() < 2) continue;
      for (std::size_t t = 0; t < n; ++t) REQUIRE(cai_autocorrelation(x, t) == oracle::corr(v, t));
    }
}
