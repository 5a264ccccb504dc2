#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "deckforge/graph.hpp"

namespace deckforge {

/// Largest order representable in the one-byte graph6 size prefix.
inline constexpr int kGraph6ShortMax = 62;

/// graph6 encoding. Orders 63 and 64 use the standard 4-byte long prefix;
/// those strings are valid in memory but rejected by the file readers.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 record (no trailing newline). Only the short size
/// prefix is accepted; malformed input throws ParseError with the offending
/// byte offset.
Graph from_graph6(std::string_view text);

/// Decoder used for in-memory canonical codes; also accepts the long prefix.
Graph decode_graph6_any(std::string_view text);

/// Reads newline-delimited graph6 records, skipping blank lines and an
/// optional `>>graph6<<` header. Offsets in errors are relative to the stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace deckforge
