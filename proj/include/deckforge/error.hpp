#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deckforge {

enum class Errc {
  InvalidVertexSet,
  NotConnected,
  InvalidCardSize,
  InconsistentDeck,
  ParseError,
  GirthTooSmall,
  NotACenter,
  NotAcyclicDeck,
  InconsistentInput,
  MissingBoundary,
  OutOfValidityRange,
  ExcludedCase,
  NotATree,
  IsAPath,
  BadCard,
  BudgetExceeded,
  InvalidParameter,
  Overflow,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(Errc::ParseError, "byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Checked 64-bit arithmetic.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// C(n, k), zero when k > n or k < 0. Throws Errc::Overflow past 2^64.
std::uint64_t binomial(int n, int k);

}  // namespace deckforge
