#include "pnseq/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <set>
#include <thread>

#include "pnseq/errors.hpp"
#include "pnseq/number_theory.hpp"

namespace pnseq {

NodeLimitExceeded::NodeLimitExceeded(SearchReport partial)
    : std::runtime_error("node limit exceeded after " + std::to_string(partial.nodes_visited) + " nodes"),
      partial_(std::move(partial)) {}

namespace {

constexpr std::size_t kMaxWord = 63;
constexpr std::uint64_t kFlushEvery = 1024;

struct SharedBudget {
  std::uint64_t limit = 0;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> stop{false};
};

// A subtree root of the necklace tree: positions 1..t-1 assigned.
struct Frontier {
  std::array<std::uint8_t, kMaxWord + 1> prefix{};
  std::size_t t = 1;
  std::size_t p = 1;
  std::size_t ones = 0;
};

// Fixed-density necklace generation (FKM prenecklace recursion, binary,
// lexicographically least rotation with 0 < 1) with optional per-lag bounds
// on the shifted-distance equations. a[1..n] holds the string; a[0] = 0.
class NecklaceWalker {
 public:
  NecklaceWalker(std::size_t n, std::size_t weight, bool prune, SharedBudget* budget)
      : n_(n), weight_(weight), prune_(prune), half_((n - 1) / 2), target_((n + 1) / 2), budget_(budget) {
    if (!prune_) return;
    open_.assign((n + 1) * (kMaxWord + 1), 0);
    for (std::size_t t = 0; t <= n; ++t)
      for (std::size_t k = 1; k <= half_; ++k) {
        const std::size_t forward = t > k ? t - k : 0;
        const std::size_t wrap = t > n - k ? t - (n - k) : 0;
        open_[t * (kMaxWord + 1) + k] = n - forward - wrap;
      }
  }

  // Visits leaves (complete necklaces) with callback(a) where a is 1-indexed.
  template <typename Leaf>
  void run(const Frontier& from, Leaf&& leaf) {
    a_ = from.prefix;
    prefix_ = 0;
    for (std::size_t t = 1; t < from.t; ++t) prefix_ |= std::uint64_t{a_[t]} << (t - 1);
    gen(from.t, from.p, from.ones, leaf);
  }

  // Expands the tree down to depth `split_t` and records the subtree roots.
  void collect(std::size_t split_t, std::vector<Frontier>& out) {
    a_.fill(0);
    prefix_ = 0;
    split_t_ = split_t;
    frontier_ = &out;
    auto none = [](const auto&) {};
    gen(1, 1, 0, none);
    frontier_ = nullptr;
    split_t_ = 0;
  }

  std::uint64_t nodes() const noexcept { return nodes_ + pending_; }
  bool stopped() const noexcept { return budget_ && budget_->stop.load(std::memory_order_relaxed); }

  void flush() {
    if (budget_) budget_->spent.fetch_add(pending_, std::memory_order_relaxed);
    nodes_ += pending_;
    pending_ = 0;
  }

 private:
  bool count_node() {
    ++pending_;
    if (!budget_) return true;
    if (budget_->stop.load(std::memory_order_relaxed)) return false;
    if (budget_->limit && budget_->spent.load(std::memory_order_relaxed) + pending_ > budget_->limit) {
      budget_->stop.store(true, std::memory_order_relaxed);
      return false;
    }
    if (pending_ >= kFlushEvery) flush();
    return true;
  }

  // Whether every lag k = 1..(n-1)/2 can still reach exactly (n+1)/2
  // mismatches between the string and its rotation, given positions 1..t.
  // prefix_ holds bit l = a[l + 1]. Below depth (n+1)/2 no bound can bind.
  bool feasible(std::size_t t) const {
    if (!prune_ || t < target_) return true;
    const std::uint64_t known = (std::uint64_t{1} << t) - 1;
    for (std::size_t k = half_; k >= 1; --k) {
      const std::uint64_t forward = t > k ? (std::uint64_t{1} << (t - k)) - 1 : 0;
      const std::uint64_t wrap = t > n_ - k ? known & ~((std::uint64_t{1} << (n_ - k)) - 1) : 0;
      const auto m = static_cast<std::size_t>(std::popcount((prefix_ ^ (prefix_ >> k)) & forward) +
                                              std::popcount((prefix_ ^ (prefix_ << (n_ - k))) & wrap));
      if (m > target_ || m + open_[t * (kMaxWord + 1) + k] < target_) return false;
    }
    return true;
  }

  template <typename Leaf>
  void gen(std::size_t t, std::size_t p, std::size_t ones, Leaf& leaf) {
    if (t == split_t_ && frontier_) {
      Frontier f;
      f.prefix = a_;
      f.t = t;
      f.p = p;
      f.ones = ones;
      frontier_->push_back(f);
      return;
    }
    if (t > n_) {
      // Candidate evaluation.
      if (n_ % p == 0 && ones == weight_ && count_node()) leaf(a_);
      return;
    }
    // Interior branch node.
    if (!count_node()) return;
    const std::uint8_t inherited = a_[t - p];
    for (std::uint8_t v = inherited; v <= 1; ++v) {
      const std::size_t next_ones = ones + v;
      if (next_ones > weight_ || next_ones + (n_ - t) < weight_) continue;
      a_[t] = v;
      const std::uint64_t saved = prefix_;
      prefix_ |= std::uint64_t{v} << (t - 1);
      if (feasible(t)) gen(t + 1, v == inherited ? p : t, next_ones, leaf);
      prefix_ = saved;
      if (stopped()) return;
    }
    a_[t] = 0;
  }

  std::size_t n_;
  std::size_t weight_;
  bool prune_;
  std::size_t half_;
  std::size_t target_;
  SharedBudget* budget_;
  std::array<std::uint8_t, kMaxWord + 1> a_{};
  std::uint64_t prefix_ = 0;
  // open_[t * 64 + k]: lag-k pairs still undetermined once positions 1..t are set.
  std::vector<std::size_t> open_;
  std::uint64_t nodes_ = 0;
  std::uint64_t pending_ = 0;
  std::size_t split_t_ = 0;
  std::vector<Frontier>* frontier_ = nullptr;
};

std::uint64_t pack(const std::array<std::uint8_t, kMaxWord + 1>& a, std::size_t n) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < n; ++i) mask |= std::uint64_t{a[i + 1]} << i;
  return mask;
}

// Ideal test on a packed word: popcount(b XOR T^k b) = (n+1)/2 for all lags.
bool word_is_ideal(std::uint64_t b, std::size_t n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int target = static_cast<int>((n + 1) / 2);
  for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
    const std::uint64_t rot = ((b >> k) | (b << (n - k))) & full;
    if (std::popcount(b ^ rot) != target) return false;
  }
  return true;
}

BipolarSequence unpack(std::uint64_t b, std::size_t n) {
  std::vector<std::int8_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = (b >> i & 1) ? -1 : 1;
  return BipolarSequence(std::move(e));
}

std::size_t distinct_rotations(const BipolarSequence& x) {
  const std::size_t n = x.size();
  for (std::size_t d = 1; d < n; ++d)
    if (n % d == 0 && cyclic_shift(x, d) == x) return d;
  return n;
}

void sort_classes(SearchReport& r) {
  std::sort(r.classes.begin(), r.classes.end(),
            [](const SearchClass& a, const SearchClass& b) { return a.canonical < b.canonical; });
}

void fold_reversals(SearchReport& r) {
  std::vector<SearchClass> kept;
  std::set<BipolarSequence> dropped;
  for (auto& c : r.classes) {
    if (dropped.count(c.canonical)) continue;
    const BipolarSequence rev = canonical_form(reverse(c.canonical));
    if (rev != c.canonical) {
      const bool present = std::any_of(r.classes.begin(), r.classes.end(),
                                       [&](const SearchClass& o) { return o.canonical == rev; });
      if (present) {
        c.reversal_merged = true;
        dropped.insert(rev);
      }
    }
    kept.push_back(std::move(c));
  }
  r.classes = std::move(kept);
}

}  // namespace

void merge_reports(SearchReport& a, const SearchReport& b) {
  if (a.n != b.n) throw LengthMismatch("cannot merge search reports of different lengths");
  for (const auto& c : b.classes) {
    const bool present = std::any_of(a.classes.begin(), a.classes.end(),
                                     [&](const SearchClass& o) { return o.canonical == c.canonical; });
    if (!present) {
      a.classes.push_back(c);
      a.sequences_total += c.rotations;
    }
  }
  a.nodes_visited += b.nodes_visited;
  a.elapsed += b.elapsed;
  a.complete = a.complete && b.complete;
  if (a.reason.empty()) a.reason = b.reason;
  sort_classes(a);
}

SearchReport exhaustive_search(std::size_t n, const SearchOptions& options) {
  if (n < kMinSearchLength || n > kMaxSearchLength)
    throw DomainError("search length must be in [2, 43]");
  const auto started = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = n;
  if (n % 2 == 0) {
    report.reason = "n is even";
    return report;
  }
  if (n % 4 == 1 && options.short_circuit) {
    report.reason = "n ≡ 1 mod 4";
    return report;
  }

  const bool prune = options.pruning == Pruning::Always ||
                     (options.pruning == Pruning::Auto && n >= kPruningCrossover);
  const std::size_t weight = (n + 1) / 2;
  SharedBudget budget;
  budget.limit = options.node_limit;

  // Subtree roots at a fixed depth; chunks are independent.
  std::vector<Frontier> frontier;
  const std::size_t split_t = n >= 21 ? 11 : 0;
  if (split_t == 0) {
    frontier.emplace_back();
  } else {
    NecklaceWalker top(n, weight, prune, &budget);
    top.collect(split_t, frontier);
    top.flush();
    report.nodes_visited += top.nodes();
  }

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(frontier.size())));
  struct ChunkResult {
    std::vector<std::uint64_t> found;
    std::uint64_t nodes = 0;
  };
  std::vector<ChunkResult> results(jobs);
  auto work = [&](unsigned id) {
    NecklaceWalker walker(n, weight, prune, &budget);
    auto& out = results[id];
    for (std::size_t i = id; i < frontier.size() && !budget.stop.load(std::memory_order_relaxed); i += jobs) {
      walker.run(frontier[i], [&](const auto& a) {
        const std::uint64_t b = pack(a, n);
        if (word_is_ideal(b, n)) out.found.push_back(b);
      });
    }
    walker.flush();
    out.nodes = walker.nodes();
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
  }

  for (const auto& r : results) {
    report.nodes_visited += r.nodes;
    for (auto b : r.found) {
      SearchClass c{canonical_form(unpack(b, n)), 0, false};
      c.rotations = distinct_rotations(c.canonical);
      report.sequences_total += c.rotations;
      report.classes.push_back(std::move(c));
    }
  }
  sort_classes(report);
  if (options.dedup_reversal) fold_reversals(report);
  report.elapsed = std::chrono::steady_clock::now() - started;
  if (budget.stop.load()) {
    report.complete = false;
    throw NodeLimitExceeded(std::move(report));
  }
  return report;
}

void for_each_necklace(std::size_t n, std::size_t weight, const std::function<void(const BinarySequence&)>& visit) {
  if (n < 1 || n > kMaxWord) throw DomainError("necklace length must be in [1, 63]");
  if (weight > n) throw DomainError("weight must be <= n");
  NecklaceWalker walker(n, weight, false, nullptr);
  walker.run(Frontier{}, [&](const auto& a) {
    std::vector<std::uint8_t> bits(a.begin() + 1, a.begin() + 1 + static_cast<std::ptrdiff_t>(n));
    visit(BinarySequence(std::move(bits)));
  });
}

std::vector<BinarySequence> balanced_candidates(std::size_t n, std::size_t weight) {
  std::vector<BinarySequence> out;
  for_each_necklace(n, weight, [&](const BinarySequence& b) { out.push_back(b); });
  return out;
}

Feasibility prune_check(std::span<const std::int8_t> prefix, std::size_t n) {
  if (prefix.size() > n) throw DomainError("prefix longer than the sequence");
  if (n % 2 == 0) return Feasibility::Infeasible;
  const std::size_t len = prefix.size();
  const auto minus = static_cast<std::size_t>(std::count(prefix.begin(), prefix.end(), std::int8_t{-1}));
  const std::size_t plus = len - minus;
  if (minus > (n + 1) / 2 || plus > (n - 1) / 2) return Feasibility::Infeasible;
  for (std::size_t k = 1; k <= (n - 1) / 2; ++k) {
    std::int64_t partial = 0;
    std::size_t determined = 0;
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t j = (l + k) % n;
      if (l < len && j < len) {
        partial += prefix[l] * prefix[j];
        ++determined;
      }
    }
    if (static_cast<std::size_t>(std::llabs(partial + 1)) > n - determined) return Feasibility::Infeasible;
  }
  return Feasibility::Feasible;
}

namespace {

// Berlekamp-Massey over GF(2). Returns connection coefficients c_1..c_L with
// s_t = sum_j c_j s_{t-j}.
std::vector<std::uint8_t> berlekamp_massey(const std::vector<std::uint8_t>& s) {
  std::vector<std::uint8_t> c(s.size() + 1, 0), b(s.size() + 1, 0);
  c[0] = b[0] = 1;
  std::size_t len = 0;
  std::ptrdiff_t m = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::uint8_t d = s[i];
    for (std::size_t j = 1; j <= len; ++j) d ^= c[j] & s[i - j];
    if (!d) continue;
    auto prev = c;
    const std::size_t shift = i - static_cast<std::size_t>(m);
    for (std::size_t j = 0; j + shift < c.size(); ++j) c[j + shift] ^= b[j];
    if (2 * len <= i) {
      len = i + 1 - len;
      m = static_cast<std::ptrdiff_t>(i);
      b = std::move(prev);
    }
  }
  return {c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(len)};
}

bool same_class(const BipolarSequence& candidate, const BipolarSequence& c, const BipolarSequence& r) {
  const BipolarSequence g = canonical_form(candidate);
  return g == c || g == r;
}

}  // namespace

std::optional<FamilyLabel> classify(const BipolarSequence& x) {
  if (!is_ideal(x)) throw DomainError("classify needs an ideal sequence");
  const std::uint64_t n = x.size();
  const BipolarSequence c = canonical_form(x);
  const BipolarSequence r = canonical_form(reverse(x));

  if (auto k = nt::mersenne_exponent(n); k && *k >= kMinDegree && *k <= kMaxDegree) {
    // Recover the shortest recurrence of the 0/1 image; an m-sequence of
    // degree k has linear complexity exactly k.
    const BinarySequence bits = to_binary(c);
    std::vector<std::uint8_t> s(2 * n);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<std::uint8_t>(bits[i % n]);
    const auto conn = berlekamp_massey(s);
    if (conn.size() == *k && conn.back() == 1) {
      TapSet taps = 0;
      for (std::size_t j = 1; j <= *k; ++j)
        if (conn[j - 1]) taps |= TapSet{1} << (*k - j);
      if (lfsr_period(*k, taps) == n && same_class(m_sequence(*k, taps), c, r))
        return FamilyLabel::m_sequence(*k, taps);
    }
  }
  if (n % 4 == 3 && n <= kMaxLegendrePrime && nt::is_prime(n) && same_class(legendre(n), c, r))
    return FamilyLabel::legendre(n);
  if (auto p = nt::twin_prime_factor(n); p && n <= kMaxValidatedLength && same_class(twin_prime(*p), c, r))
    return FamilyLabel::twin_prime(*p);
  if (n <= kMaxValidatedLength && nt::is_prime(n) && nt::hall_parameter(n) && same_class(hall_sextic(n), c, r))
    return FamilyLabel::hall_sextic(n);
  return std::nullopt;
}

}  // namespace pnseq
