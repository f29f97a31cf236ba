#include "pnseq/runs.hpp"

#include <cstdlib>

#include "pnseq/errors.hpp"

namespace pnseq {

std::size_t RunDecomposition::count(std::size_t f) const {
  auto it = histogram.find(f);
  return it == histogram.end() ? 0 : it->second;
}

RunDecomposition decompose(const BipolarSequence& x) {
  const std::size_t n = x.size();
  RunDecomposition d;
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != x[(i + n - 1) % n]) {
      start = i;
      break;
    }
  if (start == n) {
    d.run_lengths.push_back(n);
    d.run_values.push_back(static_cast<std::int8_t>(x[0]));
  } else {
    std::size_t len = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t cur = (start + j) % n;
      const std::size_t prev = (start + j - 1) % n;
      if (j < n && x[cur] == x[prev]) {
        ++len;
      } else {
        d.run_lengths.push_back(len);
        d.run_values.push_back(static_cast<std::int8_t>(x[prev]));
        len = 1;
      }
    }
  }
  for (auto f : d.run_lengths) ++d.histogram[f];
  return d;
}

std::vector<RunBound> run_property_check(const BipolarSequence& x) {
  const std::size_t n = x.size();
  const RunDecomposition d = decompose(x);
  std::vector<RunBound> out;
  out.reserve(n);
  for (std::size_t f = 1; f <= n; ++f) {
    RunBound b;
    b.f = f;
    b.count = d.count(f);
    if (f + 1 < 64) {
      const std::uint64_t den = std::uint64_t{1} << (f + 1);
      b.lower = n / den;
      b.upper = (n + den - 1) / den;
    } else {
      b.lower = 0;
      b.upper = 1;
    }
    b.pass = b.lower <= b.count && b.count <= b.upper;
    out.push_back(b);
  }
  return out;
}

std::size_t pattern_count(const RunDecomposition& runs, std::span<const std::size_t> pattern) {
  if (pattern.empty()) throw DomainError("run pattern must be nonempty");
  for (auto f : pattern)
    if (f == 0) throw DomainError("run pattern entries must be >= 1");
  const std::size_t g = runs.gamma();
  std::size_t count = 0;
  for (std::size_t s = 0; s < g; ++s) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) match = runs.run_lengths[(s + j) % g] == pattern[j];
    count += match;
  }
  return count;
}

std::size_t pattern_count(const BipolarSequence& x, std::span<const std::size_t> pattern) {
  return pattern_count(decompose(x), pattern);
}

std::int64_t cai_autocorrelation(const BipolarSequence& x, std::size_t tau) {
  const std::size_t n = x.size();
  if (tau >= n) throw DomainError("lag out of range: tau must be < n");
  const RunDecomposition d = decompose(x);
  const std::size_t g = d.gamma();
  if (g < 2) throw DomainError("run-by-run formula needs at least two runs");

  // Each realized pattern is visited once per cyclic starting run, so the
  // accumulated sum already carries the multiplicity N(R_f1 .. R_fl).
  std::int64_t sum = 0;
  const auto t = static_cast<std::int64_t>(tau);
  for (std::size_t s = 0; s < g; ++s) {
    std::int64_t total = 0;
    for (std::size_t l = 1; l <= g; ++l) {
      total += static_cast<std::int64_t>(d.run_lengths[(s + l - 1) % g]);
      if (total >= t) break;
      sum += (l % 2 ? -1 : 1) * (t - total);
    }
  }
  return static_cast<std::int64_t>(n) - 2 * t * static_cast<std::int64_t>(g) - 4 * sum;
}

GolombReport golomb_report(const BipolarSequence& x) {
  GolombReport r;
  r.balance = std::llabs(balance(x)) <= 1;
  const auto d = decompose(x);
  // A constant sequence has no run boundaries; it is treated as failing the
  // run postulate outright.
  r.run = d.gamma() >= 2;
  if (r.run)
    for (const auto& b : run_property_check(x))
      if (!b.pass) {
        r.run = false;
        break;
      }
  r.ideal = x.size() >= 2 && is_ideal(x);
  return r;
}

}  // namespace pnseq
