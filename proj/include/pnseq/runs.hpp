#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pnseq/sequence.hpp"

namespace pnseq {

// Cyclic (wrap-around) maximal-block decomposition. The run cycle starts at
// the first index i with x[i] != x[i-1 mod n]; a constant sequence is one run.
struct RunDecomposition {
  std::vector<std::size_t> run_lengths;
  std::vector<std::int8_t> run_values;
  std::map<std::size_t, std::size_t> histogram;  // f -> N(R_f)

  std::size_t gamma() const noexcept { return run_lengths.size(); }
  std::size_t count(std::size_t f) const;
};

RunDecomposition decompose(const BipolarSequence& x);

struct RunBound {
  std::size_t f = 0;
  std::size_t count = 0;
  std::size_t lower = 0;  // floor(n / 2^(f+1))
  std::size_t upper = 0;  // ceil(n / 2^(f+1))
  bool pass = false;
};

// One entry per f = 1..n.
std::vector<RunBound> run_property_check(const BipolarSequence& x);

// Cyclic starting positions in the run cycle whose next l run lengths equal
// the pattern. Throws DomainError on an empty pattern or a zero entry.
std::size_t pattern_count(const RunDecomposition& runs, std::span<const std::size_t> pattern);
std::size_t pattern_count(const BipolarSequence& x, std::span<const std::size_t> pattern);

// R_x(tau) evaluated run by run:
//   n - 2 tau gamma - 4 sum_{f_1+..+f_l < tau} (-1)^l (tau - i) N(R_f1 .. R_fl)
// with i = f_1 + .. + f_l. Throws DomainError for tau >= n or gamma < 2.
std::int64_t cai_autocorrelation(const BipolarSequence& x, std::size_t tau);

struct GolombReport {
  bool balance = false;
  bool run = false;
  bool ideal = false;
};

GolombReport golomb_report(const BipolarSequence& x);

}  // namespace pnseq
