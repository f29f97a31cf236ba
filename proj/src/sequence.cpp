#include "pnseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pnseq/errors.hpp"

namespace pnseq {

BipolarSequence::BipolarSequence(std::vector<std::int8_t> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("sequence must have length >= 1");
  for (auto v : elements_)
    if (v != 1 && v != -1) throw std::invalid_argument("bipolar element must be +1 or -1");
}

BipolarSequence BipolarSequence::from_ints(std::span<const int> values) {
  std::vector<std::int8_t> e;
  e.reserve(values.size());
  for (int v : values) {
    if (v != 1 && v != -1) throw std::invalid_argument("bipolar element must be +1 or -1");
    e.push_back(static_cast<std::int8_t>(v));
  }
  return BipolarSequence(std::move(e));
}

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("sequence must have length >= 1");
  for (auto v : bits_)
    if (v > 1) throw std::invalid_argument("binary element must be 0 or 1");
}

std::int64_t autocorrelation(const BipolarSequence& x, std::size_t tau) {
  const std::size_t n = x.size();
  if (tau >= n) throw DomainError("lag out of range: tau must be < n");
  std::int64_t sum = 0;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t j = l + tau;
    if (j >= n) j -= n;
    sum += x[l] * x[j];
  }
  return sum;
}

AutocorrelationProfile autocorrelation_profile(const BipolarSequence& x) {
  AutocorrelationProfile p;
  p.values.resize(x.size());
  for (std::size_t tau = 0; tau < x.size(); ++tau) p.values[tau] = autocorrelation(x, tau);
  return p;
}

bool is_ideal(const BipolarSequence& x) {
  if (x.size() < 2) throw DomainError("ideal autocorrelation needs n >= 2");
  for (std::size_t tau = 1; tau < x.size(); ++tau)
    if (autocorrelation(x, tau) != -1) return false;
  return true;
}

std::int64_t balance(const BipolarSequence& x) {
  auto e = x.elements();
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

BinarySequence to_binary(const BipolarSequence& x) {
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) bits[i] = static_cast<std::uint8_t>((1 - x[i]) / 2);
  return BinarySequence(std::move(bits));
}

BipolarSequence from_binary(const BinarySequence& b) {
  std::vector<std::int8_t> e(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) e[i] = static_cast<std::int8_t>(1 - 2 * b[i]);
  return BipolarSequence(std::move(e));
}

namespace {

template <typename T>
std::vector<T> rotate_left(std::span<const T> v, std::size_t tau) {
  if (tau >= v.size()) throw DomainError("shift out of range: tau must be < n");
  std::vector<T> out(v.begin(), v.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(tau), out.end());
  return out;
}

}  // namespace

BipolarSequence cyclic_shift(const BipolarSequence& x, std::size_t tau) {
  return BipolarSequence(rotate_left(x.elements(), tau));
}

BinarySequence cyclic_shift(const BinarySequence& b, std::size_t tau) {
  return BinarySequence(rotate_left(b.bits(), tau));
}

BipolarSequence reverse(const BipolarSequence& x) {
  auto e = x.elements();
  return BipolarSequence(std::vector<std::int8_t>(e.rbegin(), e.rend()));
}

BinarySequence reverse(const BinarySequence& b) {
  auto e = b.bits();
  return BinarySequence(std::vector<std::uint8_t>(e.rbegin(), e.rend()));
}

BipolarSequence negate(const BipolarSequence& x) {
  std::vector<std::int8_t> e(x.elements().begin(), x.elements().end());
  for (auto& v : e) v = static_cast<std::int8_t>(-v);
  return BipolarSequence(std::move(e));
}

BinarySequence negate(const BinarySequence& b) {
  std::vector<std::uint8_t> e(b.bits().begin(), b.bits().end());
  for (auto& v : e) v ^= 1u;
  return BinarySequence(std::move(e));
}

std::size_t hamming_weight(const BinarySequence& b) {
  auto bits = b.bits();
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::size_t hamming_distance(const BinarySequence& a, const BinarySequence& b) {
  if (a.size() != b.size()) throw LengthMismatch("hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

PairStats shift_pair_stats(const BinarySequence& b, std::size_t tau) {
  const std::size_t n = b.size();
  if (tau < 1 || tau >= n) throw DomainError("pair statistics need 1 <= tau < n");
  PairStats s;
  for (std::size_t i = 0; i < n; ++i) {
    const int u = b[i];
    const int v = b[(i + tau) % n];
    if (u != v)
      ++s.mismatches;
    else if (u == 1)
      ++s.one_one;
    else
      ++s.zero_zero;
  }
  return s;
}

std::vector<std::int64_t> binary_gram(const BinarySequence& b) {
  const std::size_t n = b.size();
  std::vector<std::int64_t> row(n, 0);
  for (std::size_t tau = 0; tau < n; ++tau)
    for (std::size_t i = 0; i < n; ++i) row[tau] += b[i] & b[(i + tau) % n];
  return row;
}

std::size_t least_rotation(std::span<const std::int8_t> s) {
  // Booth's algorithm over the doubled string.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::int8_t sj = s[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

BipolarSequence canonical_form(const BipolarSequence& x) {
  const BipolarSequence base = balance(x) == 1 ? negate(x) : x;
  const std::size_t k = least_rotation(base.elements());
  return k == 0 ? base : cyclic_shift(base, k);
}

ParsedSequence parse_sequence(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty sequence");

  bool bipolar = false;
  bool binary = false;
  std::vector<std::int8_t> e;
  e.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': bipolar = true; e.push_back(1); break;
      case '-': bipolar = true; e.push_back(-1); break;
      case '0': binary = true; e.push_back(1); break;
      case '1': binary = true; e.push_back(-1); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "' in sequence");
    }
  }
  if (bipolar && binary) throw ParseError("mixed '+/-' and '0/1' alphabets in one sequence");
  return {bipolar ? Alphabet::Bipolar : Alphabet::Binary, BipolarSequence(std::move(e))};
}

std::string to_string(const BipolarSequence& x) {
  std::string s(x.size(), '+');
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0) s[i] = '-';
  return s;
}

std::string to_string(const BinarySequence& b) {
  std::string s(b.size(), '0');
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) s[i] = '1';
  return s;
}

}  // namespace pnseq
