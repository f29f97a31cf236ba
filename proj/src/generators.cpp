#include "pnseq/generators.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "packed_bits.hpp"
#include "pnseq/errors.hpp"
#include "pnseq/number_theory.hpp"

namespace pnseq {

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::MSequence: return "m-sequence";
    case Family::Legendre: return "Legendre";
    case Family::TwinPrime: return "twin-prime";
    case Family::HallSextic: return "Hall-sextic";
  }
  return "unknown";
}

FamilyLabel FamilyLabel::m_sequence(unsigned k, TapSet taps) {
  if (k < kMinDegree || k > kMaxDegree) throw DomainError("m-sequence degree must be in [2, 20]");
  if ((taps & 1u) == 0 || taps >= (TapSet{1} << k)) throw DomainError("tap set is not a degree-k feedback set");
  return {Family::MSequence, k, taps, 0, (std::uint64_t{1} << k) - 1};
}

FamilyLabel FamilyLabel::legendre(std::uint64_t p) {
  if (!nt::is_prime(p)) throw DomainError("Legendre sequence needs a prime length");
  if (p % 4 != 3) throw DomainError("Legendre sequence needs p = 3 mod 4 (p = 1 mod 4 has no ideal autocorrelation)");
  return {Family::Legendre, 0, 0, p, p};
}

FamilyLabel FamilyLabel::twin_prime(std::uint64_t p) {
  if (!nt::is_prime(p) || !nt::is_prime(p + 2)) throw DomainError("twin-prime sequence needs p and p + 2 prime");
  return {Family::TwinPrime, 0, 0, p, p * (p + 2)};
}

FamilyLabel FamilyLabel::hall_sextic(std::uint64_t p) {
  if (!nt::is_prime(p) || !nt::hall_parameter(p)) throw DomainError("Hall sextic sequence needs a prime p = 4a^2 + 27");
  return {Family::HallSextic, 0, 0, p, p};
}

namespace {

void check_degree(unsigned k) {
  if (k < kMinDegree || k > kMaxDegree) throw DomainError("register degree must be in [2, 20]");
}

struct Register {
  unsigned k;
  TapSet taps;
  std::uint32_t state;  // bit i holds s_{t+i}

  int step() noexcept {
    const int out = static_cast<int>(state & 1u);
    const std::uint32_t fb = static_cast<std::uint32_t>(std::popcount(state & taps) & 1);
    state = (state >> 1) | (fb << (k - 1));
    return out;
  }
};

// GF(2)[x] arithmetic modulo a degree-k polynomial, k <= 20.
std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f, unsigned k) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k & 1) a ^= f;
  }
  return r;
}

std::uint64_t gf2_x_pow(std::uint64_t e, std::uint64_t f, unsigned k) {
  std::uint64_t result = 1;
  std::uint64_t base = 2;  // x
  while (e) {
    if (e & 1) result = gf2_mulmod(result, base, f, k);
    base = gf2_mulmod(base, base, f, k);
    e >>= 1;
  }
  return result;
}

BinarySequence register_bits(unsigned k, TapSet taps, std::size_t n) {
  Register reg{k, taps, std::uint32_t{1} << (k - 1)};
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(reg.step());
  return BinarySequence(std::move(bits));
}

BipolarSequence sign_normalized(const BinarySequence& marks) {
  BipolarSequence x = from_binary(marks);
  return balance(x) == 1 ? negate(x) : x;
}

}  // namespace

std::uint64_t lfsr_period(unsigned k, TapSet taps) {
  check_degree(k);
  const std::uint32_t start = std::uint32_t{1} << (k - 1);
  Register reg{k, taps, start};
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t t = 1; t <= limit; ++t) {
    reg.step();
    if (reg.state == start) return t;
  }
  return 0;
}

std::vector<TapSet> primitive_tap_sets(unsigned k) {
  check_degree(k);
  const std::uint64_t order = (std::uint64_t{1} << k) - 1;
  const auto factors = nt::prime_factors(order);
  std::vector<TapSet> out;
  // x has multiplicative order exactly 2^k - 1 modulo the characteristic
  // polynomial iff the register started from 0..01 has full period.
  for (TapSet taps = 1; taps < (TapSet{1} << k); taps += 2) {
    const std::uint64_t f = (std::uint64_t{1} << k) | taps;
    if (gf2_x_pow(order, f, k) != 1) continue;
    bool full = true;
    for (auto q : factors)
      if (gf2_x_pow(order / q, f, k) == 1) {
        full = false;
        break;
      }
    if (full) out.push_back(taps);
  }
  return out;
}

BipolarSequence m_sequence(unsigned k, std::optional<TapSet> taps) {
  check_degree(k);
  const std::uint64_t n = (std::uint64_t{1} << k) - 1;
  TapSet chosen = 0;
  if (taps) {
    if ((*taps & 1u) == 0 || *taps >= (TapSet{1} << k))
      throw DomainError("tap set is not a degree-k feedback set (bit 0 must be set, bits < k)");
    const auto period = lfsr_period(k, *taps);
    if (period != n)
      throw NotPrimitive("feedback polynomial is not primitive: period " + std::to_string(period) +
                             " < " + std::to_string(n),
                         period);
    chosen = *taps;
  } else {
    for (TapSet t = 1; t < (TapSet{1} << k); t += 2)
      if (lfsr_period(k, t) == n) {
        chosen = t;
        break;
      }
    if (chosen == 0) throw InternalError("no primitive tap set found");
  }
  return from_binary(register_bits(k, chosen, n));
}

BipolarSequence legendre(std::uint64_t p) {
  FamilyLabel::legendre(p);
  if (p > kMaxLegendrePrime) throw DomainError("Legendre prime too large");
  std::vector<std::int8_t> e(p);
  e[0] = -1;
  for (std::uint64_t i = 1; i < p; ++i) e[i] = static_cast<std::int8_t>(nt::quadratic_character(i, p));
  return BipolarSequence(std::move(e));
}

BipolarSequence twin_prime(std::uint64_t p) {
  const auto label = FamilyLabel::twin_prime(p);
  const std::uint64_t q = p + 2;
  const std::uint64_t n = label.length;
  if (n > kMaxValidatedLength) throw DomainError("twin-prime length too large to validate");
  std::vector<std::uint8_t> marks(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i % q == 0)
      marks[i] = 1;
    else if (std::gcd(i, n) == 1 && nt::quadratic_character(i, p) == nt::quadratic_character(i, q))
      marks[i] = 1;
  }
  BipolarSequence x = sign_normalized(BinarySequence(std::move(marks)));
  if (!detail::packed_is_ideal(x)) throw InternalError("twin-prime construction is not ideal");
  return x;
}

BipolarSequence hall_sextic(std::uint64_t p) {
  FamilyLabel::hall_sextic(p);
  if (p > kMaxValidatedLength) throw DomainError("Hall sextic prime too large to validate");
  std::vector<std::uint64_t> log(p, 0);
  for (std::uint64_t g = 2; g < p; ++g) {
    if (!nt::is_primitive_root(g, p)) continue;
    std::uint64_t v = 1;
    for (std::uint64_t e = 0; e < p - 1; ++e) {
      log[v] = e;
      v = v * g % p;
    }
    std::vector<std::uint8_t> marks(p, 0);
    for (std::uint64_t a = 1; a < p; ++a) {
      const auto c = log[a] % 6;
      marks[a] = c == 0 || c == 1 || c == 3;
    }
    BipolarSequence x = sign_normalized(BinarySequence(std::move(marks)));
    if (detail::packed_is_ideal(x)) return x;
  }
  throw InternalError("no generator yields an ideal sextic-residue sequence");
}

std::vector<LengthClasses> valid_lengths(std::uint64_t upper) {
  if (upper < 3) throw DomainError("upper bound must be >= 3");
  std::vector<LengthClasses> out;
  for (std::uint64_t n = 3; n <= upper; n += 4) {
    LengthClasses c;
    c.n = n;
    c.prime = nt::is_prime(n);
    c.twin_prime_product = nt::twin_prime_factor(n).has_value();
    c.mersenne = nt::mersenne_exponent(n).has_value();
    out.push_back(c);
  }
  return out;
}

}  // namespace pnseq
