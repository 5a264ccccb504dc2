#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "deckforge/graph.hpp"

namespace deckforge {

/// Isomorphism-class key: the graph6 string of a canonically relabeled graph.
/// Two graphs share a code exactly when they are isomorphic, so codes compare
/// and hash as plain strings.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  /// Wraps an already-canonical graph6 string. No canonicity check is made;
  /// use canonical_form() to obtain codes from arbitrary graphs.
  explicit CanonicalCode(std::string graph6) : text_(std::move(graph6)) {}

  const std::string& str() const { return text_; }
  int order() const;
  Graph graph() const;

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  std::string text_;
};

/// perm[v] = canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalCode canonical_form(const Graph& g);

/// Direct backtracking isomorphism test. It shares no code with
/// canonical_form, so the two can be cross-checked against each other.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace deckforge

template <>
struct std::hash<deckforge::CanonicalCode> {
  std::size_t operator()(const deckforge::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.str());
  }
};
