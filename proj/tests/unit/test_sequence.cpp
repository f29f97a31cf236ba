#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pnseq/errors.hpp"
#include "pnseq/sequence.hpp"

using namespace pnseq;

namespace {

BipolarSequence seq(const oracle::Vec& v) { return BipolarSequence::from_ints(v); }

oracle::Vec ints(const BipolarSequence& x) { return {x.elements().begin(), x.elements().end()}; }

BinarySequence bits(std::initializer_list<std::uint8_t> b) { return BinarySequence(std::vector<std::uint8_t>(b)); }

const oracle::Vec kN7 = {-1, -1, -1, 1, -1, 1, 1};
const oracle::Vec kN11 = {-1, -1, -1, 1, -1, -1, 1, -1, 1, 1, 1};

}  // namespace

TEST_CASE("construction rejects bad elements") {
  CHECK_THROWS_AS(BipolarSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(BipolarSequence({1, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(BipolarSequence({2}), std::invalid_argument);
  CHECK_THROWS_AS(BinarySequence({0, 2}), std::invalid_argument);
  CHECK(BipolarSequence({1}).size() == 1);
}

TEST_CASE("autocorrelation examples") {
  CHECK(autocorrelation(seq({-1, -1, 1}), 0) == 3);
  CHECK(autocorrelation(seq({-1, -1, 1}), 1) == -1);
  CHECK(autocorrelation(seq(kN7), 3) == -1);
  CHECK_THROWS_AS(autocorrelation(seq({-1, -1, 1}), 3), DomainError);
}

TEST_CASE("is_ideal examples") {
  CHECK(is_ideal(seq({-1, -1, 1})));
  CHECK_FALSE(is_ideal(seq({1, 1, 1})));
  CHECK(is_ideal(seq(kN11)));
  CHECK_THROWS_AS(is_ideal(seq({1})), DomainError);
}

TEST_CASE("balance examples") {
  CHECK(balance(seq({-1, -1, 1})) == -1);
  CHECK(balance(seq(kN7)) == -1);
  CHECK(balance(seq({1, 1, -1})) == 1);
}

TEST_CASE("theta transform") {
  CHECK(to_binary(seq(kN7)) == bits({1, 1, 1, 0, 1, 0, 0}));
  CHECK(to_binary(seq({1, 1, 1, 1})) == bits({0, 0, 0, 0}));
  CHECK(to_binary(seq({-1, -1, 1})) == bits({1, 1, 0}));
  CHECK(from_binary(bits({1, 1, 0})) == seq({-1, -1, 1}));
  CHECK(from_binary(bits({0, 0, 0})) == seq({1, 1, 1}));
  CHECK(from_binary(bits({1, 1, 1, 0, 1, 0, 0})) == seq(kN7));
}

TEST_CASE("structural transforms") {
  CHECK(cyclic_shift(bits({1, 1, 1, 0, 1, 0, 0}), 1) == bits({1, 1, 0, 1, 0, 0, 1}));
  CHECK(negate(seq({-1, -1, 1})) == seq({1, 1, -1}));
  CHECK(reverse(seq({-1, -1, 1})) == seq({1, -1, -1}));
  CHECK(negate(bits({1, 0})) == bits({0, 1}));
  CHECK(reverse(bits({1, 1, 0})) == bits({0, 1, 1}));
  CHECK(cyclic_shift(seq(kN7), 0) == seq(kN7));
}

TEST_CASE("hamming weight and distance") {
  const auto b = bits({1, 1, 1, 0, 1, 0, 0});
  CHECK(hamming_weight(b) == 4);
  CHECK(hamming_distance(b, b) == 0);
  CHECK(hamming_distance(b, cyclic_shift(b, 1)) == 4);
  CHECK_THROWS_AS(hamming_distance(b, bits({1, 0})), LengthMismatch);
}

TEST_CASE("shift_pair_stats") {
  CHECK(shift_pair_stats(bits({1, 1, 1, 0, 1, 0, 0}), 1) == PairStats{4, 2, 1});
  CHECK(shift_pair_stats(to_binary(seq(kN11)), 2) == PairStats{6, 3, 2});
  // A period-2 word is fixed by an even shift.
  const auto p = bits({1, 0, 1, 0, 1, 0});
  CHECK(shift_pair_stats(p, 2) == PairStats{0, 3, 3});
  CHECK_THROWS_AS(shift_pair_stats(p, 0), DomainError);
  CHECK_THROWS_AS(shift_pair_stats(p, 6), DomainError);
}

TEST_CASE("canonical form examples") {
  for (std::size_t k = 0; k < 3; ++k) CHECK(canonical_form(cyclic_shift(seq({-1, -1, 1}), k)) == seq({-1, -1, 1}));
  CHECK(canonical_form(seq({1, 1, -1})) == seq({-1, -1, 1}));
  const auto c = canonical_form(seq(kN11));
  CHECK(canonical_form(c) == c);
}

TEST_CASE("least rotation matches the all-rotations oracle") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      const auto v = oracle::tuple(n, c);
      REQUIRE(ints(canonical_form(seq(v))) == oracle::canonical(v));
    }
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = oracle::random_tuple(40 + trial % 25, rng);
    REQUIRE(ints(canonical_form(seq(v))) == oracle::canonical(v));
  }
}

TEST_CASE("parse_sequence") {
  auto p = parse_sequence("  ---+-++\n");
  CHECK(p.alphabet == Alphabet::Bipolar);
  CHECK(p.sequence == seq(kN7));
  p = parse_sequence("1110100");
  CHECK(p.alphabet == Alphabet::Binary);
  CHECK(p.sequence == seq(kN7));
  CHECK(to_string(seq(kN7)) == "---+-++");
  CHECK(to_string(bits({1, 0})) == "10");
  CHECK_THROWS_AS(parse_sequence(""), ParseError);
  CHECK_THROWS_AS(parse_sequence("   "), ParseError);
  CHECK_THROWS_AS(parse_sequence("+-1"), ParseError);
  CHECK_THROWS_AS(parse_sequence("+x-"), ParseError);
  CHECK_THROWS_AS(parse_sequence("+ -"), ParseError);
}

TEST_CASE("binary gram counts common ones") {
  const auto b = to_binary(seq(kN7));
  const auto g = binary_gram(b);
  CHECK(g[0] == 4);
  for (std::size_t t = 1; t < 7; ++t) CHECK(g[t] == 2);
}

TEST_CASE("property: autocorrelation profile invariants") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 40;
    const auto v = oracle::random_tuple(n, rng);
    const auto x = seq(v);
    const auto prof = autocorrelation_profile(x);
    REQUIRE(prof.values.size() == n);
    CHECK(prof.values[0] == static_cast<long long>(n));
    const auto b = to_binary(x);
    for (std::size_t t = 0; t < n; ++t) {
      CHECK(prof.values[t] == oracle::corr(v, t));
      CHECK((prof.values[t] - static_cast<long long>(n)) % 2 == 0);
      if (t > 0) CHECK(prof.values[t] == prof.values[n - t]);
      // R = n - 2 d(x', T^t x')
      CHECK(prof.values[t] == static_cast<long long>(n) - 2 * static_cast<long long>(hamming_distance(b, cyclic_shift(b, t))));
    }
    CHECK(from_binary(to_binary(x)) == x);
  }
}

TEST_CASE("property: ideality is invariant under negation, shift and reversal") {
  for (std::size_t n = 2; n <= 11; ++n)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      const auto x = seq(oracle::tuple(n, c));
      const bool i = is_ideal(x);
      REQUIRE(is_ideal(negate(x)) == i);
      REQUIRE(is_ideal(reverse(x)) == i);
      REQUIRE(is_ideal(cyclic_shift(x, c % n)) == i);
      if (i) {
        REQUIRE(std::abs(balance(x)) == 1);
      }
    }
}

TEST_CASE("property: ideal sequences have the binary-domain pair structure") {
  for (std::size_t n = 3; n <= 15; n += 4)
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      const auto v = oracle::tuple(n, c);
      if (!oracle::ideal(v)) continue;
      auto x = seq(v);
      if (balance(x) == 1) x = negate(x);
      const auto b = to_binary(x);
      REQUIRE(hamming_weight(b) == (n + 1) / 2);
      for (std::size_t t = 1; t < n; ++t) {
        const auto s = shift_pair_stats(b, t);
        REQUIRE(s.mismatches == (n + 1) / 2);
        REQUIRE(s.zero_zero == (n - 3) / 4);
        REQUIRE(s.one_one == s.zero_zero + 1);
      }
    }
}

TEST_CASE("no ideal sequence at even or 1 mod 4 lengths up to 13") {
  for (std::size_t n = 2; n <= 13; ++n) {
    if (n % 4 == 3) continue;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) REQUIRE_FALSE(is_ideal(seq(oracle::tuple(n, c))));
  }
}
