#include "pnseq/report.hpp"

#include <complex>
#include <sstream>

#include "pnseq/runs.hpp"

namespace pnseq {

using nlohmann::json;

Verdicts verify_all(const BipolarSequence& x, double tol) {
  Verdicts v;
  if (x.size() < 2) return v;
  v.exact = is_ideal(x);
  v.gram = is_ideal_gram(x);
  v.spectral = spectral_ideal_check(x, tol);
  v.correlation_system = correlation_system_check(x);
  v.cosine_system = cosine_system_check(x, tol);
  return v;
}

std::string family_string(const std::optional<FamilyLabel>& label) {
  return label ? std::string(family_name(label->tag)) : std::string("unknown");
}

json family_json(const FamilyLabel& label) {
  json j{{"type", family_name(label.tag)}, {"length", label.length}};
  switch (label.tag) {
    case Family::MSequence:
      j["degree"] = label.degree;
      j["taps"] = label.taps;
      break;
    case Family::Legendre:
    case Family::HallSextic:
    case Family::TwinPrime:
      j["p"] = label.prime;
      break;
  }
  return j;
}

json run_report_json(const BipolarSequence& x) {
  const RunDecomposition d = decompose(x);
  json hist = json::object();
  for (const auto& [f, count] : d.histogram) hist[std::to_string(f)] = count;
  json bounds = json::array();
  for (const auto& b : run_property_check(x))
    bounds.push_back({{"f", b.f}, {"count", b.count}, {"lower", b.lower}, {"upper", b.upper}, {"pass", b.pass}});
  const GolombReport g = golomb_report(x);
  return json{{"gamma", d.gamma()},
              {"run_lengths", d.run_lengths},
              {"histogram", hist},
              {"per_f_bounds", bounds},
              {"postulates", {{"balance", g.balance}, {"run", g.run}, {"ideal", g.ideal}}}};
}

json analyze_json(const BipolarSequence& x, double tol) {
  const std::size_t n = x.size();
  json notes = json::array();
  if (n < 2) notes.push_back("n < 2: ideal autocorrelation undefined");
  else if (n % 2 == 0) notes.push_back("n even: ideal autocorrelation impossible");
  else if (n % 4 == 1) notes.push_back("n ≡ 1 mod 4: ideal autocorrelation impossible");

  const Verdicts v = verify_all(x, tol);
  json family = nullptr;
  json family_params = nullptr;
  if (v.exact) {
    const auto label = classify(x);
    family = family_string(label);
    if (label) family_params = family_json(*label);
  }

  json spec = json::array();
  for (const auto& lambda : spectrum(x).values) spec.push_back(std::norm(lambda));

  json pairs = json::array();
  const BinarySequence b = to_binary(x);
  for (std::size_t tau = 1; tau < n; ++tau) {
    const PairStats s = shift_pair_stats(b, tau);
    pairs.push_back({{"tau", tau}, {"mismatches", s.mismatches}, {"one_one", s.one_one}, {"zero_zero", s.zero_zero}});
  }

  json runs = run_report_json(x);
  const auto gamma = runs["gamma"];
  return json{{"n", n},
              {"sequence", to_string(x)},
              {"family", family},
              {"family_parameters", family_params},
              {"ideal", v.exact},
              {"verdicts",
               {{"exact", v.exact},
                {"gram", v.gram},
                {"spectral", v.spectral},
                {"correlation_system", v.correlation_system},
                {"cosine_system", v.cosine_system}}},
              {"balance", balance(x)},
              {"weight", hamming_weight(b)},
              {"gamma", gamma},
              {"autocorrelation", autocorrelation_profile(x).values},
              {"runs", runs},
              {"golomb", runs["postulates"]},
              {"spectrum", spec},
              {"pair_stats", pairs},
              {"notes", notes}};
}

nlohmann::ordered_json search_summary_json(const SearchReport& r) {
  nlohmann::ordered_json j{{"n", r.n},
         {"class_count", r.class_count()},
         {"sequences_total", r.sequences_total},
         {"nodes_visited", r.nodes_visited},
         {"elapsed_seconds", r.elapsed.count()},
         {"complete", r.complete}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

std::string search_jsonl(const SearchReport& r) {
  std::ostringstream os;
  for (const auto& c : r.classes) {
    nlohmann::ordered_json line{{"n", r.n},
              {"canonical", to_string(c.canonical)},
              {"family", family_string(classify(c.canonical))},
              {"rotations", c.rotations}};
    if (c.reversal_merged) line["reversal_merged"] = true;
    os << line.dump() << '\n';
  }
  os << nlohmann::ordered_json{{"summary", search_summary_json(r)}}.dump() << '\n';
  return os.str();
}

}  // namespace pnseq
