#include "deckforge/error.hpp"

namespace deckforge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidVertexSet: return "InvalidVertexSet";
    case Errc::NotConnected: return "NotConnected";
    case Errc::InvalidCardSize: return "InvalidCardSize";
    case Errc::InconsistentDeck: return "InconsistentDeck";
    case Errc::ParseError: return "ParseError";
    case Errc::GirthTooSmall: return "GirthTooSmall";
    case Errc::NotACenter: return "NotACenter";
    case Errc::NotAcyclicDeck: return "NotAcyclicDeck";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::MissingBoundary: return "MissingBoundary";
    case Errc::OutOfValidityRange: return "OutOfValidityRange";
    case Errc::ExcludedCase: return "ExcludedCase";
    case Errc::NotATree: return "NotATree";
    case Errc::IsAPath: return "IsAPath";
    case Errc::BadCard: return "BadCard";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "unsigned addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "unsigned multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "signed addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "signed multiplication");
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace deckforge
