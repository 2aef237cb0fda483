#pragma once

#include <string>
#include <string_view>

#include "reed/graph.hpp"

namespace reed {

/// Largest order representable with the one-byte graph6 length prefix.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes one graph6 line. A leading ">>graph6<<" header is accepted.
/// Throws ParseError naming the offending byte offset.
Graph graph_from_graph6(std::string_view text);

/// Encodes g as headerless graph6. Throws UnsupportedSize when n > 62.
std::string graph_to_graph6(const Graph& g);

} // namespace reed
