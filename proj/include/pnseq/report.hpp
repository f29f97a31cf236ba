#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pnseq/circulant.hpp"
#include "pnseq/generators.hpp"
#include "pnseq/search.hpp"
#include "pnseq/sequence.hpp"

namespace pnseq {

// Outcome of the five independent ideal-autocorrelation predicates.
struct Verdicts {
  bool exact = false;
  bool gram = false;
  bool spectral = false;
  bool correlation_system = false;
  bool cosine_system = false;

  bool all() const noexcept { return exact && gram && spectral && correlation_system && cosine_system; }
  bool agree() const noexcept {
    return exact == gram && exact == spectral && exact == correlation_system && exact == cosine_system;
  }
};

// n < 2 yields all-false verdicts.
Verdicts verify_all(const BipolarSequence& x, double tol = kDefaultTolerance);

std::string family_string(const std::optional<FamilyLabel>& label);
nlohmann::json family_json(const FamilyLabel& label);

// {gamma, histogram, per_f_bounds, postulates}
nlohmann::json run_report_json(const BipolarSequence& x);

// Always carries the keys n, sequence, family, ideal, balance, gamma, runs,
// spectrum; also autocorrelation, golomb, pair_stats and notes.
nlohmann::json analyze_json(const BipolarSequence& x, double tol = kDefaultTolerance);

// One {"n","canonical","family","rotations"} object per line, keys in that order, then a
// {"summary": {...}} line.
std::string search_jsonl(const SearchReport& report);
nlohmann::ordered_json search_summary_json(const SearchReport& report);

}  // namespace pnseq
