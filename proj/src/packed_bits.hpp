#pragma once

// Word-packed {0,1} sequences for correlation checks on long sequences:
// R_x(k) = n - 2 * popcount(b XOR T^k b).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pnseq/sequence.hpp"

namespace pnseq::detail {

class PackedBits {
 public:
  explicit PackedBits(const BinarySequence& b) : n_(b.size()), words_((2 * b.size() + 127) / 64, 0) {
    // The sequence is stored twice so any rotation is a contiguous window.
    for (std::size_t i = 0; i < 2 * n_; ++i)
      if (b[i % n_]) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::size_t size() const noexcept { return n_; }

  // Hamming distance between b and its left rotation by k.
  std::size_t shifted_distance(std::size_t k) const noexcept {
    std::size_t d = 0;
    std::size_t i = 0;
    for (; i + 64 <= n_; i += 64) d += std::popcount(window(i) ^ window(i + k));
    if (i < n_) {
      const std::uint64_t mask = (std::uint64_t{1} << (n_ - i)) - 1;
      d += std::popcount((window(i) ^ window(i + k)) & mask);
    }
    return d;
  }

  bool is_ideal() const noexcept {
    const std::size_t target = (n_ + 1) / 2;
    if (n_ % 2 == 0) return false;
    for (std::size_t k = 1; k <= n_ / 2; ++k)
      if (shifted_distance(k) != target) return false;
    return true;
  }

 private:
  std::uint64_t window(std::size_t bit) const noexcept {
    const std::size_t w = bit / 64;
    const unsigned s = bit % 64;
    if (s == 0) return words_[w];
    return (words_[w] >> s) | (words_[w + 1] << (64 - s));
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

inline bool packed_is_ideal(const BipolarSequence& x) { return x.size() >= 2 && PackedBits(to_binary(x)).is_ideal(); }

}  // namespace pnseq::detail
