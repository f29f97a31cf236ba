// pnseq command-line front end. Talks to the library exclusively through the
// C interface in pnseq/pnseq.h.
//
// Exit codes: 0 pass, 1 failed verdict (or incomplete search), 2 usage or
// input error, 3 verification modes disagree.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pnseq/pnseq.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagree = 3;

using json = nlohmann::json;

struct SequenceDeleter {
  void operator()(pnseq_sequence* s) const { pnseq_sequence_free(s); }
};
struct ReportDeleter {
  void operator()(pnseq_search_report* r) const { pnseq_search_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { pnseq_string_free(s); }
};
using Sequence = std::unique_ptr<pnseq_sequence, SequenceDeleter>;
using Report = std::unique_ptr<pnseq_search_report, ReportDeleter>;

// Error raised by a failing library call; carries the CLI exit code.
struct CliError {
  int code;
  std::string message;
};

void check(pnseq_status st, int code = kExitUsage) {
  if (st != PNSEQ_OK) throw CliError{code, std::string(pnseq_status_string(st)) + ": " + pnseq_last_error()};
}

std::string take_string(char* s) {
  std::unique_ptr<char, StringDeleter> guard(s);
  return s ? std::string(s) : std::string();
}

std::string text(const pnseq_sequence* s) {
  char* out = nullptr;
  check(pnseq_sequence_to_string(s, &out), kExitFail);
  return take_string(out);
}

Sequence parse(const std::string& line) {
  pnseq_sequence* s = nullptr;
  check(pnseq_sequence_parse(line.c_str(), &s));
  return Sequence(s);
}

// An existing file contributes one sequence per non-empty, non-# line;
// anything else is parsed as an inline sequence.
std::vector<std::string> read_inputs(const std::string& input) {
  std::vector<std::string> lines;
  std::error_code ec;
  if (!input.empty() && input.find_first_not_of("+-01 \t") != std::string::npos &&
      std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::string line;
    while (std::getline(in, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') continue;
      lines.push_back(line);
    }
    if (lines.empty()) throw CliError{kExitUsage, "no sequences in " + input};
  } else {
    lines.push_back(input);
  }
  return lines;
}

std::string signs(const pnseq_sequence* s) {
  std::vector<int> v(pnseq_sequence_length(s));
  check(pnseq_sequence_values(s, v.data(), v.size()), kExitFail);
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string family_of(const pnseq_sequence* s) {
  pnseq_family_label label{};
  if (pnseq_classify(s, &label) != PNSEQ_OK) return "unknown";
  return pnseq_family_name(label.family);
}

struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw CliError{kExitUsage, "cannot open output file " + path};
    os = &file;
  }
};

// ---- generate ----------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::optional<unsigned> k;
  std::optional<uint32_t> taps;
  std::optional<uint64_t> p;
  std::optional<uint64_t> n;
  std::string format = "text";
};

int run_generate(const GenerateArgs& a, std::ostream& os) {
  pnseq_sequence* raw = nullptr;
  const std::string& f = a.family;
  if (f == "m" || f == "m-sequence" || f == "msequence") {
    unsigned k = 0;
    if (a.k) {
      k = *a.k;
    } else if (a.n) {
      while (k < 63 && ((uint64_t{1} << k) - 1) < *a.n) ++k;
      if (((uint64_t{1} << k) - 1) != *a.n) throw CliError{kExitUsage, "m-sequence length must be 2^k - 1"};
    } else {
      throw CliError{kExitUsage, "m-sequence needs --k or --n"};
    }
    check(pnseq_generate_m_sequence(k, a.taps.value_or(0), &raw));
  } else if (f == "legendre") {
    if (!a.p && !a.n) throw CliError{kExitUsage, "Legendre sequence needs --p or --n"};
    check(pnseq_generate_legendre(a.p ? *a.p : *a.n, &raw));
  } else if (f == "twin" || f == "twin-prime") {
    uint64_t p = 0;
    if (a.p) {
      p = *a.p;
    } else if (a.n) {
      while ((p + 1) * (p + 3) <= *a.n) ++p;
      if (p * (p + 2) != *a.n) throw CliError{kExitUsage, "twin-prime length must be p(p+2)"};
    } else {
      throw CliError{kExitUsage, "twin-prime sequence needs --p or --n"};
    }
    check(pnseq_generate_twin_prime(p, &raw));
  } else if (f == "hall" || f == "hall-sextic") {
    if (!a.p && !a.n) throw CliError{kExitUsage, "Hall sextic sequence needs --p or --n"};
    check(pnseq_generate_hall_sextic(a.p ? *a.p : *a.n, &raw));
  } else {
    throw CliError{kExitUsage, "unknown family '" + f + "' (m, legendre, twin, hall)"};
  }
  Sequence seq(raw);

  int ideal = 0;
  int64_t bal = 0;
  size_t gamma = 0;
  check(pnseq_is_ideal(seq.get(), &ideal), kExitFail);
  check(pnseq_balance(seq.get(), &bal), kExitFail);
  check(pnseq_run_count(seq.get(), &gamma), kExitFail);
  const std::string family = ideal ? family_of(seq.get()) : "unknown";
  if (a.format == "json") {
    os << json{{"n", pnseq_sequence_length(seq.get())},
               {"sequence", text(seq.get())},
               {"family", family},
               {"ideal", ideal != 0},
               {"balance", bal},
               {"gamma", gamma}}
              .dump()
       << '\n';
  } else {
    os << text(seq.get()) << " n:" << pnseq_sequence_length(seq.get()) << " ideal:" << (ideal ? "yes" : "no")
       << " balance:" << bal << " gamma:" << gamma << " family:" << family << '\n';
  }
  return ideal ? kExitPass : kExitFail;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string mode = "all";
  double tol = 1e-9;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a, std::ostream& os) {
  int rc = kExitPass;
  json all = json::array();
  for (const auto& line : read_inputs(a.input)) {
    Sequence seq = parse(line);
    const size_t n = pnseq_sequence_length(seq.get());
    pnseq_verdicts v{};
    check(pnseq_verify(seq.get(), a.tol, &v), kExitFail);

    std::vector<std::pair<std::string, bool>> verdicts;
    if (a.mode == "exact" || a.mode == "all") verdicts.emplace_back("exact", v.exact);
    if (a.mode == "gram" || a.mode == "all") verdicts.emplace_back("gram", v.gram);
    if (a.mode == "spectral" || a.mode == "all") verdicts.emplace_back("spectral", v.spectral);
    if (a.mode == "system" || a.mode == "all") {
      verdicts.emplace_back("correlation-system", v.correlation_system);
      verdicts.emplace_back("cosine-system", v.cosine_system);
    }
    bool pass = true;
    bool agree = true;
    for (const auto& [name, ok] : verdicts) {
      pass = pass && ok;
      agree = agree && ok == verdicts.front().second;
    }

    // First off-peak lag that misses -1, for the failure message.
    std::string detail;
    if (!v.exact && n >= 2) {
      std::vector<int64_t> profile(n);
      check(pnseq_autocorrelation_profile(seq.get(), profile.data(), n), kExitFail);
      for (size_t tau = 1; tau < n; ++tau)
        if (profile[tau] != -1) {
          detail = "R(" + std::to_string(tau) + ")=" + std::to_string(profile[tau]);
          break;
        }
    } else if (n < 2) {
      detail = "n < 2";
    }

    if (a.mode == "all" && !agree) rc = kExitDisagree;
    else if (!pass && rc == kExitPass) rc = kExitFail;

    if (a.format == "json") {
      json j{{"sequence", text(seq.get())}, {"n", n}, {"pass", pass}};
      for (const auto& [name, ok] : verdicts) j["verdicts"][name] = ok;
      if (a.mode == "all") j["agree"] = agree;
      if (!detail.empty()) j["detail"] = detail;
      all.push_back(j);
    } else {
      os << text(seq.get()) << " n=" << n;
      for (const auto& [name, ok] : verdicts) os << ' ' << name << ':' << (ok ? "pass" : "fail");
      os << " => " << (pass ? "PASS" : "FAIL");
      if (!detail.empty()) os << ' ' << detail;
      if (a.mode == "all" && !agree) os << " DISAGREEMENT";
      os << '\n';
    }
  }
  if (a.format == "json") os << all.dump() << '\n';
  return rc;
}

// ---- analyze -----------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  std::string format = "text";
  bool json_flag = false;
  std::optional<size_t> pair_tau;
  std::string csv;
  double tol = 1e-9;
};

void print_analysis(const json& r, std::ostream& os) {
  os << "sequence: " << r["sequence"].get<std::string>() << '\n';
  os << "n: " << r["n"] << "  balance: " << r["balance"] << "  weight: " << r["weight"] << '\n';
  for (const auto& note : r["notes"]) os << "note: " << note.get<std::string>() << '\n';
  os << "ideal: " << (r["ideal"].get<bool>() ? "yes" : "no");
  if (!r["family"].is_null()) os << "  family: " << r["family"].get<std::string>();
  os << '\n';
  os << "autocorrelation:";
  for (const auto& v : r["autocorrelation"]) os << ' ' << v;
  os << '\n';
  os << "spectrum |lambda_m|^2:";
  for (const auto& v : r["spectrum"]) {
    std::ostringstream s;
    s.precision(6);
    s << v.get<double>();
    os << ' ' << s.str();
  }
  os << '\n';
  const auto& runs = r["runs"];
  os << "runs: gamma " << runs["gamma"] << ", lengths";
  for (const auto& f : runs["run_lengths"]) os << ' ' << f;
  os << '\n';
  os << "run histogram:";
  for (const auto& [f, c] : runs["histogram"].items()) os << " N(R_" << f << ")=" << c;
  os << '\n';
  for (const auto& b : runs["per_f_bounds"]) {
    if (b["count"].get<size_t>() == 0 && b["lower"].get<size_t>() == 0) continue;
    os << "  f=" << b["f"] << ": " << b["lower"] << " <= N=" << b["count"] << " <= " << b["upper"]
       << (b["pass"].get<bool>() ? "" : "  FAIL") << '\n';
  }
  const auto& g = r["golomb"];
  auto mark = [](const json& v) { return v.get<bool>() ? "yes" : "no"; };
  os << "postulates: balance " << mark(g["balance"]) << ", run " << mark(g["run"]) << ", ideal "
     << mark(g["ideal"]) << '\n';
}

int run_analyze(const AnalyzeArgs& a, std::ostream& os) {
  const bool as_json = a.json_flag || a.format == "json";
  json all = json::array();
  for (const auto& line : read_inputs(a.input)) {
    Sequence seq = parse(line);
    if (!a.csv.empty()) {
      char* out = nullptr;
      if (a.csv == "circulant") check(pnseq_circulant_csv(seq.get(), &out));
      else if (a.csv == "spectrum") check(pnseq_spectrum_csv(seq.get(), &out));
      else throw CliError{kExitUsage, "--csv takes circulant or spectrum"};
      os << take_string(out);
      continue;
    }
    char* out = nullptr;
    check(pnseq_analyze_json(seq.get(), a.tol, &out), kExitFail);
    json r = json::parse(take_string(out));
    if (a.pair_tau) {
      pnseq_pair_stats s{};
      check(pnseq_shift_pair_stats(seq.get(), *a.pair_tau, &s));
      r["pair_stats_requested"] = {
          {"tau", *a.pair_tau}, {"mismatches", s.mismatches}, {"one_one", s.one_one}, {"zero_zero", s.zero_zero}};
    }
    if (as_json) {
      all.push_back(r);
    } else {
      print_analysis(r, os);
      if (a.pair_tau) {
        const auto& p = r["pair_stats_requested"];
        os << "pair stats tau=" << *a.pair_tau << ": (" << p["mismatches"] << "," << p["one_one"] << ","
           << p["zero_zero"] << ")  [mismatches, (1,1) pairs, (0,0) pairs]\n";
      }
    }
  }
  if (as_json) os << (all.size() == 1 ? all[0] : all).dump() << '\n';
  return kExitPass;
}

// ---- search / table ----------------------------------------------------

struct SearchArgs {
  size_t n = 0;
  unsigned jobs = 1;
  uint64_t node_limit = 0;
  bool reversal_dedup = false;
  std::string prune = "auto";
  bool no_short_circuit = false;
  std::string format = "jsonl";
};

pnseq_search_options make_options(const SearchArgs& a) {
  pnseq_search_options o;
  pnseq_search_options_init(&o);
  o.jobs = a.jobs;
  o.node_limit = a.node_limit;
  o.dedup_reversal = a.reversal_dedup;
  o.short_circuit = !a.no_short_circuit;
  if (a.prune == "auto") o.pruning = PNSEQ_PRUNE_AUTO;
  else if (a.prune == "always") o.pruning = PNSEQ_PRUNE_ALWAYS;
  else if (a.prune == "never") o.pruning = PNSEQ_PRUNE_NEVER;
  else throw CliError{kExitUsage, "--prune takes auto, always or never"};
  return o;
}

int run_search(const SearchArgs& a, std::ostream& os) {
  const pnseq_search_options o = make_options(a);
  pnseq_search_report* raw = nullptr;
  const pnseq_status st = pnseq_search(a.n, &o, &raw);
  if (st != PNSEQ_OK && st != PNSEQ_ERR_NODE_LIMIT) check(st);
  Report report(raw);
  if (a.format == "text") {
    const size_t count = pnseq_search_report_class_count(report.get());
    for (size_t i = 0; i < count; ++i) {
      pnseq_sequence* c = nullptr;
      check(pnseq_search_report_class(report.get(), i, &c), kExitFail);
      Sequence cls(c);
      os << text(cls.get()) << "  " << family_of(cls.get())
         << (pnseq_search_report_class_reversal_merged(report.get(), i) ? "  (+ reverse)" : "") << '\n';
    }
    os << "n=" << a.n << " classes=" << count << " sequences=" << pnseq_search_report_sequences_total(report.get())
       << " nodes=" << pnseq_search_report_nodes_visited(report.get())
       << " elapsed=" << pnseq_search_report_elapsed_seconds(report.get()) << "s";
    const std::string reason = pnseq_search_report_reason(report.get());
    if (!reason.empty()) os << " reason: " << reason;
    os << '\n';
  } else {
    char* out = nullptr;
    check(pnseq_search_report_jsonl(report.get(), &out), kExitFail);
    os << take_string(out);
  }
  if (st == PNSEQ_ERR_NODE_LIMIT) {
    std::cerr << "search incomplete: " << pnseq_last_error() << '\n';
    return kExitFail;
  }
  return kExitPass;
}

int run_table(size_t max_n, unsigned jobs, const std::string& format, std::ostream& os) {
  json rows = json::array();
  if (format != "json") os << "n\tsequence\ttype\n";
  for (size_t n = 3; n <= max_n; n += 4) {
    SearchArgs sa;
    sa.n = n;
    sa.jobs = jobs;
    const pnseq_search_options o = make_options(sa);
    pnseq_search_report* raw = nullptr;
    check(pnseq_search(n, &o, &raw), kExitFail);
    Report report(raw);
    for (size_t i = 0; i < pnseq_search_report_class_count(report.get()); ++i) {
      pnseq_sequence* c = nullptr;
      check(pnseq_search_report_class(report.get(), i, &c), kExitFail);
      Sequence cls(c);
      const std::string type = family_of(cls.get());
      if (format == "json")
        rows.push_back({{"n", n}, {"sequence", text(cls.get())}, {"type", type}});
      else
        os << n << '\t' << signs(cls.get()) << '\t' << type << '\n';
    }
  }
  if (format == "json") os << rows.dump() << '\n';
  return kExitPass;
}

int run_lengths(uint64_t upper, const std::string& format, std::ostream& os) {
  if (upper < 3) throw CliError{kExitUsage, "--upper must be >= 3"};
  json rows = json::array();
  for (uint64_t n = 3; n <= upper; n += 4) {
    unsigned flags = 0;
    check(pnseq_length_classes(n, &flags));
    std::vector<std::string> classes;
    if (flags & PNSEQ_LENGTH_PRIME) classes.emplace_back("prime");
    if (flags & PNSEQ_LENGTH_TWIN_PRIME) classes.emplace_back("twin-prime");
    if (flags & PNSEQ_LENGTH_MERSENNE) classes.emplace_back("2^k-1");
    if (format == "json") {
      rows.push_back({{"n", n}, {"classes", classes}, {"conjecturally_empty", classes.empty()}});
    } else {
      os << n << '\t';
      if (classes.empty()) os << "conjecturally-empty";
      for (size_t i = 0; i < classes.size(); ++i) os << (i ? "," : "") << classes[i];
      os << '\n';
    }
  }
  if (format == "json") os << rows.dump() << '\n';
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pnseq: construct, verify, analyze and search binary sequences with ideal autocorrelation"};
  app.require_subcommand(1, 1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Construct a sequence from a known family");
  g->add_option("--family", gen.family, "m, legendre, twin, hall")->required();
  g->add_option("--k", gen.k, "LFSR degree (m-sequence)");
  g->add_option("--taps", gen.taps, "Feedback tap mask, bit i = cell i (m-sequence)");
  g->add_option("--p", gen.p, "Prime parameter");
  g->add_option("--n", gen.n, "Target length");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check ideal autocorrelation");
  v->add_option("input", ver.input, "Sequence string or file with one sequence per line")->required();
  v->add_option("--mode", ver.mode)->check(CLI::IsMember({"exact", "spectral", "system", "gram", "all"}));
  v->add_option("--tol", ver.tol, "Relative tolerance for floating-point checks")->check(CLI::PositiveNumber);
  v->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}));

  AnalyzeArgs ana;
  auto* an = app.add_subcommand("analyze", "Full report: correlation, spectrum, runs, postulates");
  an->add_option("input", ana.input, "Sequence string or file")->required();
  an->add_option("--format", ana.format)->check(CLI::IsMember({"text", "json"}));
  an->add_flag("--json", ana.json_flag, "Same as --format json");
  an->add_option("--pair-stats", ana.pair_tau, "Pair statistics against the shift by this lag");
  an->add_option("--csv", ana.csv, "Export circulant or spectrum as CSV")
      ->check(CLI::IsMember({"circulant", "spectrum"}));
  an->add_option("--tol", ana.tol)->check(CLI::PositiveNumber);

  SearchArgs sea;
  auto* s = app.add_subcommand("search", "Exhaustive search for all ideal sequences of length n");
  s->add_option("--n", sea.n)->required();
  s->add_option("--jobs", sea.jobs, "Parallel chunks")->check(CLI::PositiveNumber);
  s->add_option("--node-limit", sea.node_limit, "Stop after this many nodes (0 = unlimited)");
  s->add_flag("--reversal-dedup", sea.reversal_dedup, "Merge classes that are reverses of each other");
  s->add_option("--prune", sea.prune, "auto, always, never")->check(CLI::IsMember({"auto", "always", "never"}));
  s->add_flag("--no-short-circuit", sea.no_short_circuit, "Enumerate even when n = 1 mod 4");
  s->add_option("--format", sea.format)->check(CLI::IsMember({"jsonl", "text"}));

  size_t table_max = 23;
  unsigned table_jobs = 1;
  std::string table_format = "text";
  auto* t = app.add_subcommand("table", "Reproduce the table of ideal sequences up to a length");
  t->add_option("--max-n", table_max);
  t->add_option("--jobs", table_jobs)->check(CLI::PositiveNumber);
  t->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  uint64_t upper = 35;
  std::string lengths_format = "text";
  auto* l = app.add_subcommand("lengths", "Admissible lengths n = 3 mod 4 and their classes");
  l->add_option("--upper", upper);
  l->add_option("--format", lengths_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    Output out;
    out.open(out_path);
    std::ostream& os = *out.os;
    if (*g) return run_generate(gen, os);
    if (*v) return run_verify(ver, os);
    if (*an) return run_analyze(ana, os);
    if (*s) return run_search(sea, os);
    if (*t) return run_table(table_max, table_jobs, table_format, os);
    if (*l) return run_lengths(upper, lengths_format, os);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
