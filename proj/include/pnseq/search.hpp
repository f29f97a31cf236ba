#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnseq/generators.hpp"
#include "pnseq/sequence.hpp"

namespace pnseq {

inline constexpr std::size_t kMinSearchLength = 2;
inline constexpr std::size_t kMaxSearchLength = 43;
// Pruning::Auto switches to bounded depth-first extension from this length on.
inline constexpr std::size_t kPruningCrossover = 25;

enum class Pruning { Auto, Always, Never };

struct SearchOptions {
  bool dedup_reversal = false;
  std::uint64_t node_limit = 0;  // 0 = unlimited
  unsigned jobs = 1;
  Pruning pruning = Pruning::Auto;
  // Report lengths that cannot carry an ideal sequence (even, or 1 mod 4)
  // as empty without enumerating. Even lengths are always short-circuited.
  bool short_circuit = true;
};

struct SearchClass {
  BipolarSequence canonical;
  std::size_t rotations = 0;
  // Set when dedup_reversal folded the reversed class into this one.
  bool reversal_merged = false;
};

struct SearchReport {
  std::size_t n = 0;
  std::vector<SearchClass> classes;  // sorted by canonical form
  std::uint64_t sequences_total = 0;
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> elapsed{0};
  std::string reason;  // set when the length was short-circuited
  bool complete = true;

  std::size_t class_count() const noexcept { return classes.size(); }
};

// Thrown when node_limit is exceeded; carries everything found so far.
class NodeLimitExceeded : public std::runtime_error {
 public:
  explicit NodeLimitExceeded(SearchReport partial);
  const SearchReport& partial() const noexcept { return partial_; }

 private:
  SearchReport partial_;
};

// All x with sum -1 and ideal autocorrelation, one canonical representative
// per rotation class. Throws DomainError for n outside [2, 43].
SearchReport exhaustive_search(std::size_t n, const SearchOptions& options = {});

// Folds b into a (same n). Associative and commutative on class sets and
// counters; the result is re-sorted. Not meaningful after reversal dedup.
void merge_reports(SearchReport& a, const SearchReport& b);

// One representative per rotation class of length-n strings of the given
// weight (fixed-density necklaces, lexicographically least with 0 < 1).
void for_each_necklace(std::size_t n, std::size_t weight, const std::function<void(const BinarySequence&)>& visit);
std::vector<BinarySequence> balanced_candidates(std::size_t n, std::size_t weight);

enum class Feasibility { Feasible, Infeasible };

// Whether a +-1 prefix of a length-n sequence can still be completed to a
// sum -1 sequence with R_x(k) = -1 for k = 1..(n-1)/2. Never rejects a prefix
// of a true solution.
Feasibility prune_check(std::span<const std::int8_t> prefix, std::size_t n);

// Family of an ideal sequence, matched up to rotation, negation and reversal
// against the generators for its length. nullopt means unknown. Throws
// DomainError when x is not ideal.
std::optional<FamilyLabel> classify(const BipolarSequence& x);

}  // namespace pnseq
