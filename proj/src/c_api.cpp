#include "pnseq/pnseq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "pnseq/circulant.hpp"
#include "pnseq/errors.hpp"
#include "pnseq/generators.hpp"
#include "pnseq/number_theory.hpp"
#include "pnseq/report.hpp"
#include "pnseq/runs.hpp"
#include "pnseq/search.hpp"
#include "pnseq/sequence.hpp"

struct pnseq_sequence {
  pnseq::BipolarSequence value;
};

struct pnseq_search_report {
  pnseq::SearchReport value;
};

namespace {

thread_local std::string last_error;

pnseq_status fail(pnseq_status status, const char* what) {
  last_error = what;
  return status;
}

// Maps the core's exceptions onto status codes.
template <typename F>
pnseq_status guarded(F&& body) {
  try {
    body();
    return PNSEQ_OK;
  } catch (const pnseq::NotPrimitive& e) {
    return fail(PNSEQ_ERR_NOT_PRIMITIVE, e.what());
  } catch (const pnseq::DomainError& e) {
    return fail(PNSEQ_ERR_DOMAIN, e.what());
  } catch (const pnseq::LengthMismatch& e) {
    return fail(PNSEQ_ERR_LENGTH_MISMATCH, e.what());
  } catch (const pnseq::ParseError& e) {
    return fail(PNSEQ_ERR_PARSE, e.what());
  } catch (const pnseq::InternalError& e) {
    return fail(PNSEQ_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PNSEQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PNSEQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PNSEQ_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pnseq_sequence* wrap(pnseq::BipolarSequence x) { return new pnseq_sequence{std::move(x)}; }

#define PNSEQ_REQUIRE(cond) \
  if (!(cond)) return fail(PNSEQ_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond)

pnseq_family to_c(pnseq::Family f) {
  switch (f) {
    case pnseq::Family::MSequence: return PNSEQ_FAMILY_M_SEQUENCE;
    case pnseq::Family::Legendre: return PNSEQ_FAMILY_LEGENDRE;
    case pnseq::Family::TwinPrime: return PNSEQ_FAMILY_TWIN_PRIME;
    case pnseq::Family::HallSextic: return PNSEQ_FAMILY_HALL_SEXTIC;
  }
  return PNSEQ_FAMILY_UNKNOWN;
}

template <typename T, typename Range>
pnseq_status copy_out(const Range& values, T* out, size_t capacity) {
  if (capacity < values.size()) return fail(PNSEQ_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < values.size(); ++i) out[i] = static_cast<T>(values[i]);
  return PNSEQ_OK;
}

}  // namespace

extern "C" {

const char* pnseq_last_error(void) { return last_error.c_str(); }

const char* pnseq_status_string(pnseq_status status) {
  switch (status) {
    case PNSEQ_OK: return "ok";
    case PNSEQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PNSEQ_ERR_DOMAIN: return "domain error";
    case PNSEQ_ERR_LENGTH_MISMATCH: return "length mismatch";
    case PNSEQ_ERR_PARSE: return "parse error";
    case PNSEQ_ERR_NOT_PRIMITIVE: return "not primitive";
    case PNSEQ_ERR_NODE_LIMIT: return "node limit exceeded";
    case PNSEQ_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case PNSEQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pnseq_string_free(char* s) { std::free(s); }

const char* pnseq_version(void) { return "1.0.0"; }

pnseq_status pnseq_sequence_from_values(const int* values, size_t n, pnseq_sequence** out) {
  PNSEQ_REQUIRE(values && out);
  return guarded([&] { *out = wrap(pnseq::BipolarSequence::from_ints({values, n})); });
}

pnseq_status pnseq_sequence_from_bits(const uint8_t* bits, size_t n, pnseq_sequence** out) {
  PNSEQ_REQUIRE(bits && out);
  return guarded([&] { *out = wrap(pnseq::from_binary(pnseq::BinarySequence({bits, bits + n}))); });
}

pnseq_status pnseq_sequence_parse(const char* text, pnseq_sequence** out) {
  PNSEQ_REQUIRE(text && out);
  return guarded([&] { *out = wrap(pnseq::parse_sequence(text).sequence); });
}

void pnseq_sequence_free(pnseq_sequence* seq) { delete seq; }

size_t pnseq_sequence_length(const pnseq_sequence* seq) { return seq ? seq->value.size() : 0; }

pnseq_status pnseq_sequence_values(const pnseq_sequence* seq, int* out, size_t capacity) {
  PNSEQ_REQUIRE(seq && out);
  return copy_out(seq->value.elements(), out, capacity);
}

pnseq_status pnseq_sequence_to_string(const pnseq_sequence* seq, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = dup_string(pnseq::to_string(seq->value)); });
}

pnseq_status pnseq_sequence_to_binary_string(const pnseq_sequence* seq, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = dup_string(pnseq::to_string(pnseq::to_binary(seq->value))); });
}

pnseq_status pnseq_cyclic_shift(const pnseq_sequence* seq, size_t tau, pnseq_sequence** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = wrap(pnseq::cyclic_shift(seq->value, tau)); });
}

pnseq_status pnseq_reverse(const pnseq_sequence* seq, pnseq_sequence** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = wrap(pnseq::reverse(seq->value)); });
}

pnseq_status pnseq_negate(const pnseq_sequence* seq, pnseq_sequence** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = wrap(pnseq::negate(seq->value)); });
}

pnseq_status pnseq_canonical_form(const pnseq_sequence* seq, pnseq_sequence** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = wrap(pnseq::canonical_form(seq->value)); });
}

pnseq_status pnseq_autocorrelation(const pnseq_sequence* seq, size_t tau, int64_t* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = pnseq::autocorrelation(seq->value, tau); });
}

pnseq_status pnseq_autocorrelation_profile(const pnseq_sequence* seq, int64_t* out, size_t capacity) {
  PNSEQ_REQUIRE(seq && out);
  pnseq_status st = PNSEQ_OK;
  const pnseq_status g = guarded([&] { st = copy_out(pnseq::autocorrelation_profile(seq->value).values, out, capacity); });
  return g != PNSEQ_OK ? g : st;
}

pnseq_status pnseq_balance(const pnseq_sequence* seq, int64_t* out) {
  PNSEQ_REQUIRE(seq && out);
  *out = pnseq::balance(seq->value);
  return PNSEQ_OK;
}

pnseq_status pnseq_hamming_weight(const pnseq_sequence* seq, size_t* out) {
  PNSEQ_REQUIRE(seq && out);
  *out = pnseq::hamming_weight(pnseq::to_binary(seq->value));
  return PNSEQ_OK;
}

pnseq_status pnseq_shift_pair_stats(const pnseq_sequence* seq, size_t tau, pnseq_pair_stats* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] {
    const auto s = pnseq::shift_pair_stats(pnseq::to_binary(seq->value), tau);
    *out = {s.mismatches, s.one_one, s.zero_zero};
  });
}

pnseq_status pnseq_is_ideal(const pnseq_sequence* seq, int* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = pnseq::is_ideal(seq->value) ? 1 : 0; });
}

pnseq_status pnseq_verify(const pnseq_sequence* seq, double tol, pnseq_verdicts* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] {
    const auto v = pnseq::verify_all(seq->value, tol > 0 ? tol : pnseq::kDefaultTolerance);
    *out = {v.exact, v.gram, v.spectral, v.correlation_system, v.cosine_system};
  });
}

pnseq_status pnseq_gram_row(const pnseq_sequence* seq, int64_t* out, size_t capacity) {
  PNSEQ_REQUIRE(seq && out);
  pnseq_status st = PNSEQ_OK;
  const pnseq_status g = guarded([&] { st = copy_out(pnseq::gram(seq->value).first_row(), out, capacity); });
  return g != PNSEQ_OK ? g : st;
}

pnseq_status pnseq_spectrum(const pnseq_sequence* seq, double* re, double* im, size_t capacity) {
  PNSEQ_REQUIRE(seq && re && im);
  if (capacity < seq->value.size()) return fail(PNSEQ_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  return guarded([&] {
    const auto s = pnseq::spectrum(seq->value);
    for (size_t m = 0; m < s.values.size(); ++m) {
      re[m] = s.values[m].real();
      im[m] = s.values[m].imag();
    }
  });
}

pnseq_status pnseq_correlation_residuals(const pnseq_sequence* seq, int64_t* out, size_t capacity) {
  PNSEQ_REQUIRE(seq && out);
  pnseq_status st = PNSEQ_OK;
  const pnseq_status g =
      guarded([&] { st = copy_out(pnseq::correlation_system_residuals(seq->value), out, capacity); });
  return g != PNSEQ_OK ? g : st;
}

pnseq_status pnseq_cosine_residuals(const pnseq_sequence* seq, double* out, size_t capacity) {
  PNSEQ_REQUIRE(seq && out);
  pnseq_status st = PNSEQ_OK;
  const pnseq_status g = guarded([&] { st = copy_out(pnseq::cosine_system_residuals(seq->value), out, capacity); });
  return g != PNSEQ_OK ? g : st;
}

pnseq_status pnseq_circulant_csv(const pnseq_sequence* seq, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = dup_string(pnseq::dense_csv(pnseq::build_circulant(seq->value))); });
}

pnseq_status pnseq_spectrum_csv(const pnseq_sequence* seq, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = dup_string(pnseq::spectrum_csv(pnseq::spectrum(seq->value))); });
}

pnseq_status pnseq_run_count(const pnseq_sequence* seq, size_t* gamma) {
  PNSEQ_REQUIRE(seq && gamma);
  return guarded([&] { *gamma = pnseq::decompose(seq->value).gamma(); });
}

pnseq_status pnseq_run_histogram(const pnseq_sequence* seq, size_t f, size_t* count) {
  PNSEQ_REQUIRE(seq && count);
  return guarded([&] { *count = pnseq::decompose(seq->value).count(f); });
}

pnseq_status pnseq_pattern_count(const pnseq_sequence* seq, const size_t* pattern, size_t len, size_t* out) {
  PNSEQ_REQUIRE(seq && out && (pattern || len == 0));
  return guarded([&] { *out = pnseq::pattern_count(seq->value, std::span<const size_t>(pattern, len)); });
}

pnseq_status pnseq_cai_autocorrelation(const pnseq_sequence* seq, size_t tau, int64_t* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = pnseq::cai_autocorrelation(seq->value, tau); });
}

pnseq_status pnseq_golomb_report(const pnseq_sequence* seq, pnseq_golomb* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] {
    const auto g = pnseq::golomb_report(seq->value);
    *out = {g.balance, g.run, g.ideal};
  });
}

pnseq_status pnseq_run_report_json(const pnseq_sequence* seq, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] { *out = dup_string(pnseq::run_report_json(seq->value).dump()); });
}

pnseq_status pnseq_analyze_json(const pnseq_sequence* seq, double tol, char** out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded(
      [&] { *out = dup_string(pnseq::analyze_json(seq->value, tol > 0 ? tol : pnseq::kDefaultTolerance).dump()); });
}

pnseq_status pnseq_generate_m_sequence(unsigned k, uint32_t taps, pnseq_sequence** out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] {
    *out = wrap(taps ? pnseq::m_sequence(k, taps) : pnseq::m_sequence(k));
  });
}

pnseq_status pnseq_generate_legendre(uint64_t p, pnseq_sequence** out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] { *out = wrap(pnseq::legendre(p)); });
}

pnseq_status pnseq_generate_twin_prime(uint64_t p, pnseq_sequence** out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] { *out = wrap(pnseq::twin_prime(p)); });
}

pnseq_status pnseq_generate_hall_sextic(uint64_t p, pnseq_sequence** out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] { *out = wrap(pnseq::hall_sextic(p)); });
}

pnseq_status pnseq_primitive_tap_sets(unsigned k, uint32_t* out, size_t capacity, size_t* count) {
  PNSEQ_REQUIRE(count && (out || capacity == 0));
  return guarded([&] {
    const auto sets = pnseq::primitive_tap_sets(k);
    *count = sets.size();
    for (size_t i = 0; i < sets.size() && i < capacity; ++i) out[i] = sets[i];
  });
}

pnseq_status pnseq_lfsr_period(unsigned k, uint32_t taps, uint64_t* out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] { *out = pnseq::lfsr_period(k, taps); });
}

pnseq_status pnseq_length_classes(uint64_t n, unsigned* out) {
  PNSEQ_REQUIRE(out);
  return guarded([&] {
    unsigned flags = 0;
    if (pnseq::nt::is_prime(n)) flags |= PNSEQ_LENGTH_PRIME;
    if (pnseq::nt::twin_prime_factor(n)) flags |= PNSEQ_LENGTH_TWIN_PRIME;
    if (pnseq::nt::mersenne_exponent(n)) flags |= PNSEQ_LENGTH_MERSENNE;
    *out = flags;
  });
}

pnseq_status pnseq_classify(const pnseq_sequence* seq, pnseq_family_label* out) {
  PNSEQ_REQUIRE(seq && out);
  return guarded([&] {
    const auto label = pnseq::classify(seq->value);
    *out = {PNSEQ_FAMILY_UNKNOWN, 0, 0, 0, seq->value.size()};
    if (label) *out = {to_c(label->tag), label->degree, label->taps, label->prime, label->length};
  });
}

const char* pnseq_family_name(pnseq_family family) {
  switch (family) {
    case PNSEQ_FAMILY_M_SEQUENCE: return "m-sequence";
    case PNSEQ_FAMILY_LEGENDRE: return "Legendre";
    case PNSEQ_FAMILY_TWIN_PRIME: return "twin-prime";
    case PNSEQ_FAMILY_HALL_SEXTIC: return "Hall-sextic";
    case PNSEQ_FAMILY_UNKNOWN: break;
  }
  return "unknown";
}

void pnseq_search_options_init(pnseq_search_options* options) {
  if (!options) return;
  const pnseq::SearchOptions d;
  *options = {d.dedup_reversal, d.node_limit, d.jobs, PNSEQ_PRUNE_AUTO, d.short_circuit};
}

pnseq_status pnseq_search(size_t n, const pnseq_search_options* options, pnseq_search_report** out) {
  PNSEQ_REQUIRE(out);
  *out = nullptr;
  pnseq::SearchOptions opts;
  if (options) {
    opts.dedup_reversal = options->dedup_reversal != 0;
    opts.node_limit = options->node_limit;
    opts.jobs = options->jobs ? options->jobs : 1;
    switch (options->pruning) {
      case PNSEQ_PRUNE_AUTO: opts.pruning = pnseq::Pruning::Auto; break;
      case PNSEQ_PRUNE_ALWAYS: opts.pruning = pnseq::Pruning::Always; break;
      case PNSEQ_PRUNE_NEVER: opts.pruning = pnseq::Pruning::Never; break;
      default: return fail(PNSEQ_ERR_INVALID_ARGUMENT, "unknown pruning mode");
    }
    opts.short_circuit = options->short_circuit != 0;
  }
  try {
    *out = new pnseq_search_report{pnseq::exhaustive_search(n, opts)};
    return PNSEQ_OK;
  } catch (const pnseq::NodeLimitExceeded& e) {
    *out = new pnseq_search_report{e.partial()};
    return fail(PNSEQ_ERR_NODE_LIMIT, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

void pnseq_search_report_free(pnseq_search_report* report) { delete report; }

size_t pnseq_search_report_length(const pnseq_search_report* report) { return report ? report->value.n : 0; }

size_t pnseq_search_report_class_count(const pnseq_search_report* report) {
  return report ? report->value.class_count() : 0;
}

pnseq_status pnseq_search_report_class(const pnseq_search_report* report, size_t index, pnseq_sequence** out) {
  PNSEQ_REQUIRE(report && out);
  if (index >= report->value.classes.size()) return fail(PNSEQ_ERR_DOMAIN, "class index out of range");
  return guarded([&] { *out = wrap(report->value.classes[index].canonical); });
}

int pnseq_search_report_class_reversal_merged(const pnseq_search_report* report, size_t index) {
  if (!report || index >= report->value.classes.size()) return 0;
  return report->value.classes[index].reversal_merged ? 1 : 0;
}

uint64_t pnseq_search_report_sequences_total(const pnseq_search_report* report) {
  return report ? report->value.sequences_total : 0;
}

uint64_t pnseq_search_report_nodes_visited(const pnseq_search_report* report) {
  return report ? report->value.nodes_visited : 0;
}

double pnseq_search_report_elapsed_seconds(const pnseq_search_report* report) {
  return report ? report->value.elapsed.count() : 0.0;
}

int pnseq_search_report_complete(const pnseq_search_report* report) {
  return report && report->value.complete ? 1 : 0;
}

const char* pnseq_search_report_reason(const pnseq_search_report* report) {
  return report ? report->value.reason.c_str() : "";
}

pnseq_status pnseq_search_report_jsonl(const pnseq_search_report* report, char** out) {
  PNSEQ_REQUIRE(report && out);
  return guarded([&] { *out = dup_string(pnseq::search_jsonl(report->value)); });
}

}  // extern "C"
