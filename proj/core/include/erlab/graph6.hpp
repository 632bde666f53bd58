#pragma once

#include <string>
#include <string_view>

#include "erlab/graph.hpp"

namespace erlab {

/// Encodes g in the standard graph6 text format: size header, then the
/// upper triangle read column by column, packed big-endian into 6-bit
/// groups offset by 63.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line (without trailing newline). Throws parse_error
/// with the byte offset of the first offending byte on malformed input,
/// including non-zero padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace erlab
