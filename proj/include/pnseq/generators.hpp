#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pnseq/sequence.hpp"

namespace pnseq {

enum class Family { MSequence, Legendre, TwinPrime, HallSextic };

std::string_view family_name(Family f) noexcept;

// Feedback taps of a Fibonacci register of degree k: bit i set means s_{t+i}
// enters s_{t+k} = XOR of the tapped cells. Characteristic polynomial is
// x^k + sum_{i in taps} x^i, so bit 0 must be set.
using TapSet = std::uint32_t;

struct FamilyLabel {
  Family tag;
  unsigned degree = 0;      // MSequence
  TapSet taps = 0;          // MSequence
  std::uint64_t prime = 0;  // Legendre, HallSextic: p; TwinPrime: smaller prime
  std::uint64_t length = 0;

  static FamilyLabel m_sequence(unsigned k, TapSet taps);
  static FamilyLabel legendre(std::uint64_t p);
  static FamilyLabel twin_prime(std::uint64_t p);
  static FamilyLabel hall_sextic(std::uint64_t p);
};

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 20;

// Period of the register started from s_0..s_{k-1} = 0,...,0,1 (0 if the
// start state is never revisited, which happens when bit 0 is clear).
std::uint64_t lfsr_period(unsigned k, TapSet taps);

// All tap sets of degree k reaching period 2^k - 1, in increasing mask order.
std::vector<TapSet> primitive_tap_sets(unsigned k);

// Length 2^k - 1, bit 1 -> -1 and bit 0 -> +1. Without taps the smallest
// primitive mask is used. Throws NotPrimitive carrying the measured period.
BipolarSequence m_sequence(unsigned k, std::optional<TapSet> taps = std::nullopt);

// x_0 = -1, x_i = +1 for quadratic residues i, -1 otherwise. p prime, p = 3 mod 4.
BipolarSequence legendre(std::uint64_t p);

// Length p (p + 2) from the paired quadratic characters; p and p + 2 prime.
BipolarSequence twin_prime(std::uint64_t p);

// Union of sextic-residue cosets C_0, C_1, C_3; p prime with p = 4a^2 + 27.
BipolarSequence hall_sextic(std::uint64_t p);

inline constexpr std::uint64_t kMaxLegendrePrime = 10'000'000;
inline constexpr std::uint64_t kMaxValidatedLength = 200'000;

struct LengthClasses {
  std::uint64_t n = 0;
  bool prime = false;
  bool twin_prime_product = false;
  bool mersenne = false;
  bool conjecturally_empty() const noexcept { return !prime && !twin_prime_product && !mersenne; }
};

// Every n <= upper with n = 3 mod 4, tagged with its length classes.
std::vector<LengthClasses> valid_lengths(std::uint64_t upper);

}  // namespace pnseq
