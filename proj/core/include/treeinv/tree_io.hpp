#pragma once

#include <string>
#include <string_view>

#include "treeinv/tree.hpp"

namespace treeinv {

/// Parses the plain text format:
///
///   n <count>
///   u v
///   ...
///
/// '#' starts a comment that runs to the end of the line; blank lines are
/// ignored. Endpoints may appear in either order. Throws ParseError for
/// malformed text and propagates Tree::from_edges validation errors.
Tree parse_edge_list(std::string_view text);

/// Serializes in the same format with edges in canonical sorted order.
std::string to_edge_list(const Tree& tree);

/// Parses a single short-form graph6 record (supports n <= 62; the
/// long form is rejected). An optional ">>graph6<<" prefix is accepted.
/// Throws ParseError for malformed records and NotATreeError when the
/// decoded graph is not a tree.
Tree parse_graph6(std::string_view record);

/// Short-form graph6 encoding; throws TooLargeError for n > 62.
std::string to_graph6(const Tree& tree);

}  // namespace treeinv
