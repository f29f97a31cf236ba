/*
 * pnseq: binary sequences with ideal periodic autocorrelation.
 *
 * C interface over the C++ core. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a pnseq_status; on failure pnseq_last_error() describes the cause
 * (thread-local, valid until the next failing call on the same thread).
 *
 * Strings returned through char** are heap allocated; release them with
 * pnseq_string_free.
 */
#ifndef PNSEQ_H
#define PNSEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(PNSEQ_BUILDING_LIBRARY)
#define PNSEQ_API __attribute__((visibility("default")))
#else
#define PNSEQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pnseq_status {
  PNSEQ_OK = 0,
  PNSEQ_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad element, bad option */
  PNSEQ_ERR_DOMAIN = 2,           /* outside an operation's domain */
  PNSEQ_ERR_LENGTH_MISMATCH = 3,
  PNSEQ_ERR_PARSE = 4,
  PNSEQ_ERR_NOT_PRIMITIVE = 5, /* feedback taps below full period */
  PNSEQ_ERR_NODE_LIMIT = 6,    /* search stopped; partial report returned */
  PNSEQ_ERR_BUFFER_TOO_SMALL = 7,
  PNSEQ_ERR_INTERNAL = 8
} pnseq_status;

typedef enum pnseq_family {
  PNSEQ_FAMILY_UNKNOWN = 0,
  PNSEQ_FAMILY_M_SEQUENCE = 1,
  PNSEQ_FAMILY_LEGENDRE = 2,
  PNSEQ_FAMILY_TWIN_PRIME = 3,
  PNSEQ_FAMILY_HALL_SEXTIC = 4
} pnseq_family;

typedef enum pnseq_pruning { PNSEQ_PRUNE_AUTO = 0, PNSEQ_PRUNE_ALWAYS = 1, PNSEQ_PRUNE_NEVER = 2 } pnseq_pruning;

/* Length classes reported by pnseq_length_classes. */
enum {
  PNSEQ_LENGTH_PRIME = 1u << 0,
  PNSEQ_LENGTH_TWIN_PRIME = 1u << 1,
  PNSEQ_LENGTH_MERSENNE = 1u << 2
};

typedef struct pnseq_sequence pnseq_sequence;
typedef struct pnseq_search_report pnseq_search_report;

typedef struct pnseq_pair_stats {
  size_t mismatches;
  size_t one_one;
  size_t zero_zero;
} pnseq_pair_stats;

typedef struct pnseq_verdicts {
  int exact;
  int gram;
  int spectral;
  int correlation_system;
  int cosine_system;
} pnseq_verdicts;

typedef struct pnseq_golomb {
  int balance;
  int run;
  int ideal;
} pnseq_golomb;

typedef struct pnseq_family_label {
  pnseq_family family;
  unsigned degree;  /* m-sequence */
  uint32_t taps;    /* m-sequence */
  uint64_t prime;   /* Legendre / Hall: p; twin prime: smaller prime */
  uint64_t length;
} pnseq_family_label;

typedef struct pnseq_search_options {
  int dedup_reversal;
  uint64_t node_limit; /* 0 = unlimited */
  unsigned jobs;
  pnseq_pruning pruning;
  int short_circuit;
} pnseq_search_options;

/* ---- errors ----------------------------------------------------------- */
PNSEQ_API const char* pnseq_last_error(void);
PNSEQ_API const char* pnseq_status_string(pnseq_status status);
PNSEQ_API void pnseq_string_free(char* s);
PNSEQ_API const char* pnseq_version(void);

/* ---- sequences ---------------------------------------------------------- */
PNSEQ_API pnseq_status pnseq_sequence_from_values(const int* values, size_t n, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_sequence_from_bits(const uint8_t* bits, size_t n, pnseq_sequence** out);
/* '+'/'-' or '0'/'1'; binary input is mapped through 1 -> -1, 0 -> +1. */
PNSEQ_API pnseq_status pnseq_sequence_parse(const char* text, pnseq_sequence** out);
PNSEQ_API void pnseq_sequence_free(pnseq_sequence* seq);
PNSEQ_API size_t pnseq_sequence_length(const pnseq_sequence* seq);
PNSEQ_API pnseq_status pnseq_sequence_values(const pnseq_sequence* seq, int* out, size_t capacity);
PNSEQ_API pnseq_status pnseq_sequence_to_string(const pnseq_sequence* seq, char** out);
PNSEQ_API pnseq_status pnseq_sequence_to_binary_string(const pnseq_sequence* seq, char** out);

PNSEQ_API pnseq_status pnseq_cyclic_shift(const pnseq_sequence* seq, size_t tau, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_reverse(const pnseq_sequence* seq, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_negate(const pnseq_sequence* seq, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_canonical_form(const pnseq_sequence* seq, pnseq_sequence** out);

/* ---- correlation and verification --------------------------------------- */
PNSEQ_API pnseq_status pnseq_autocorrelation(const pnseq_sequence* seq, size_t tau, int64_t* out);
PNSEQ_API pnseq_status pnseq_autocorrelation_profile(const pnseq_sequence* seq, int64_t* out, size_t capacity);
PNSEQ_API pnseq_status pnseq_balance(const pnseq_sequence* seq, int64_t* out);
PNSEQ_API pnseq_status pnseq_hamming_weight(const pnseq_sequence* seq, size_t* out);
PNSEQ_API pnseq_status pnseq_shift_pair_stats(const pnseq_sequence* seq, size_t tau, pnseq_pair_stats* out);
PNSEQ_API pnseq_status pnseq_is_ideal(const pnseq_sequence* seq, int* out);
/* Runs all five predicates; tol <= 0 selects the default 1e-9. */
PNSEQ_API pnseq_status pnseq_verify(const pnseq_sequence* seq, double tol, pnseq_verdicts* out);
PNSEQ_API pnseq_status pnseq_gram_row(const pnseq_sequence* seq, int64_t* out, size_t capacity);
PNSEQ_API pnseq_status pnseq_spectrum(const pnseq_sequence* seq, double* re, double* im, size_t capacity);
PNSEQ_API pnseq_status pnseq_correlation_residuals(const pnseq_sequence* seq, int64_t* out, size_t capacity);
PNSEQ_API pnseq_status pnseq_cosine_residuals(const pnseq_sequence* seq, double* out, size_t capacity);
PNSEQ_API pnseq_status pnseq_circulant_csv(const pnseq_sequence* seq, char** out);
PNSEQ_API pnseq_status pnseq_spectrum_csv(const pnseq_sequence* seq, char** out);

/* ---- runs ---------------------------------------------------------------- */
PNSEQ_API pnseq_status pnseq_run_count(const pnseq_sequence* seq, size_t* gamma);
PNSEQ_API pnseq_status pnseq_run_histogram(const pnseq_sequence* seq, size_t f, size_t* count);
PNSEQ_API pnseq_status pnseq_pattern_count(const pnseq_sequence* seq, const size_t* pattern, size_t len, size_t* out);
PNSEQ_API pnseq_status pnseq_cai_autocorrelation(const pnseq_sequence* seq, size_t tau, int64_t* out);
PNSEQ_API pnseq_status pnseq_golomb_report(const pnseq_sequence* seq, pnseq_golomb* out);
PNSEQ_API pnseq_status pnseq_run_report_json(const pnseq_sequence* seq, char** out);
PNSEQ_API pnseq_status pnseq_analyze_json(const pnseq_sequence* seq, double tol, char** out);

/* ---- generators ---------------------------------------------------------- */
/* taps == 0 selects the smallest primitive tap set. */
PNSEQ_API pnseq_status pnseq_generate_m_sequence(unsigned k, uint32_t taps, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_generate_legendre(uint64_t p, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_generate_twin_prime(uint64_t p, pnseq_sequence** out);
PNSEQ_API pnseq_status pnseq_generate_hall_sextic(uint64_t p, pnseq_sequence** out);
/* Writes up to capacity tap sets and the total count to *count. */
PNSEQ_API pnseq_status pnseq_primitive_tap_sets(unsigned k, uint32_t* out, size_t capacity, size_t* count);
PNSEQ_API pnseq_status pnseq_lfsr_period(unsigned k, uint32_t taps, uint64_t* out);
/* Bitmask of PNSEQ_LENGTH_* for n. */
PNSEQ_API pnseq_status pnseq_length_classes(uint64_t n, unsigned* out);
PNSEQ_API pnseq_status pnseq_classify(const pnseq_sequence* seq, pnseq_family_label* out);
PNSEQ_API const char* pnseq_family_name(pnseq_family family);

/* ---- search -------------------------------------------------------------- */
PNSEQ_API void pnseq_search_options_init(pnseq_search_options* options);
/* On PNSEQ_ERR_NODE_LIMIT *out still receives the partial report. */
PNSEQ_API pnseq_status pnseq_search(size_t n, const pnseq_search_options* options, pnseq_search_report** out);
PNSEQ_API void pnseq_search_report_free(pnseq_search_report* report);
PNSEQ_API size_t pnseq_search_report_length(const pnseq_search_report* report);
PNSEQ_API size_t pnseq_search_report_class_count(const pnseq_search_report* report);
PNSEQ_API pnseq_status pnseq_search_report_class(const pnseq_search_report* report, size_t index,
                                                 pnseq_sequence** out);
PNSEQ_API int pnseq_search_report_class_reversal_merged(const pnseq_search_report* report, size_t index);
PNSEQ_API uint64_t pnseq_search_report_sequences_total(const pnseq_search_report* report);
PNSEQ_API uint64_t pnseq_search_report_nodes_visited(const pnseq_search_report* report);
PNSEQ_API double pnseq_search_report_elapsed_seconds(const pnseq_search_report* report);
PNSEQ_API int pnseq_search_report_complete(const pnseq_search_report* report);
/* Empty string when the search ran. */
PNSEQ_API const char* pnseq_search_report_reason(const pnseq_search_report* report);
PNSEQ_API pnseq_status pnseq_search_report_jsonl(const pnseq_search_report* report, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PNSEQ_H */
