#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pnseq::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Quadratic character of a modulo an odd prime p via Euler's criterion:
// 0 if p | a, +1 for residues, -1 for non-residues.
int quadratic_character(std::uint64_t a, std::uint64_t p);

bool is_primitive_root(std::uint64_t g, std::uint64_t p);

// a >= 0 with p = 4a^2 + 27, if any.
std::optional<std::uint64_t> hall_parameter(std::uint64_t p);

// k with n = 2^k - 1, if any (k >= 1).
std::optional<unsigned> mersenne_exponent(std::uint64_t n);

// p with n = p (p + 2) and both p, p + 2 prime, if any.
std::optional<std::uint64_t> twin_prime_factor(std::uint64_t n);

}  // namespace pnseq::nt
