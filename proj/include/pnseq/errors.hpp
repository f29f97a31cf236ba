#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pnseq {

// Argument outside an operation's mathematical domain (bad lag, even length
// where odd is required, non-prime modulus, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Feedback taps whose register does not reach full period.
class NotPrimitive : public std::domain_error {
 public:
  NotPrimitive(const std::string& what, std::uint64_t period)
      : std::domain_error(what), period_(period) {}
  std::uint64_t period() const noexcept { return period_; }

 private:
  std::uint64_t period_;
};

// A construction produced something that fails its own postcondition.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pnseq
