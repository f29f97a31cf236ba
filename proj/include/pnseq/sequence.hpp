#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnseq {

// Length-n vector over {+1,-1}. Immutable once built.
class BipolarSequence {
 public:
  // Throws std::invalid_argument when empty or when an element is not +-1.
  explicit BipolarSequence(std::vector<std::int8_t> elements);
  static BipolarSequence from_ints(std::span<const int> values);

  std::size_t size() const noexcept { return elements_.size(); }
  int operator[](std::size_t i) const noexcept { return elements_[i]; }
  std::span<const std::int8_t> elements() const noexcept { return elements_; }

  // Lexicographic with -1 < +1.
  friend auto operator<=>(const BipolarSequence&, const BipolarSequence&) = default;

 private:
  std::vector<std::int8_t> elements_;
};

// Length-n vector over {0,1}.
class BinarySequence {
 public:
  explicit BinarySequence(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  int operator[](std::size_t i) const noexcept { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend auto operator<=>(const BinarySequence&, const BinarySequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct AutocorrelationProfile {
  std::vector<std::int64_t> values;  // values[tau], tau = 0..n-1
};

// Column-wise pair counts between b and T^tau(b).
struct PairStats {
  std::size_t mismatches = 0;
  std::size_t one_one = 0;
  std::size_t zero_zero = 0;
  friend bool operator==(const PairStats&, const PairStats&) = default;
};

// Periodic autocorrelation sum_l x_l x_{(l+tau) mod n}. Throws DomainError
// when tau >= n.
std::int64_t autocorrelation(const BipolarSequence& x, std::size_t tau);
AutocorrelationProfile autocorrelation_profile(const BipolarSequence& x);

// True iff every off-peak autocorrelation equals -1. Requires n >= 2.
bool is_ideal(const BipolarSequence& x);

std::int64_t balance(const BipolarSequence& x);

// theta: +1 -> 0, -1 -> 1, and its inverse.
BinarySequence to_binary(const BipolarSequence& x);
BipolarSequence from_binary(const BinarySequence& b);

// T^tau is a left rotation: result[i] = x[(i + tau) mod n].
BipolarSequence cyclic_shift(const BipolarSequence& x, std::size_t tau);
BinarySequence cyclic_shift(const BinarySequence& b, std::size_t tau);
BipolarSequence reverse(const BipolarSequence& x);
BinarySequence reverse(const BinarySequence& b);
BipolarSequence negate(const BipolarSequence& x);
BinarySequence negate(const BinarySequence& b);  // bitwise complement

std::size_t hamming_weight(const BinarySequence& b);
std::size_t hamming_distance(const BinarySequence& a, const BinarySequence& b);

// Requires 1 <= tau < n.
PairStats shift_pair_stats(const BinarySequence& b, std::size_t tau);

// First row of A_{b} A_{b}^T for a {0,1} sequence: entry tau counts the
// positions where b and T^tau(b) are both 1.
std::vector<std::int64_t> binary_gram(const BinarySequence& b);

// Sign-normalized (sum = -1 when |sum| = 1) lexicographically least rotation.
BipolarSequence canonical_form(const BipolarSequence& x);

// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation(std::span<const std::int8_t> values);

enum class Alphabet { Bipolar, Binary };

struct ParsedSequence {
  Alphabet alphabet;
  BipolarSequence sequence;
};

// One sequence over {'+','-'} or {'0','1'}; surrounding whitespace ignored.
// Throws ParseError on empty input, unknown characters, or mixed alphabets.
ParsedSequence parse_sequence(std::string_view text);

std::string to_string(const BipolarSequence& x);  // '-' = -1, '+' = +1
std::string to_string(const BinarySequence& b);

}  // namespace pnseq
