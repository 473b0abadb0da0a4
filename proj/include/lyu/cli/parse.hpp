#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lyu/graph/graph.hpp"
#include "lyu/ideal/ideal.hpp"

namespace lyu::cli {

/// Parses "x1*x2, x2*x3^2, ..." into a minimalized ideal. The variable count
/// is the largest index used unless `nvars` is given.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Graph file: first line `n`, then one `u v` edge per line ('#' starts a comment).
Graph parse_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Resolves an --input value: `cycle:<n>`, a path to a graph file, or ideal text.
MonomialIdeal resolve_input(const std::string& input, std::optional<std::size_t> nvars = std::nullopt);

}  // namespace lyu::cli
