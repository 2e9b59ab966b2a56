#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "orbigraph/core.hpp"
#include "orbigraph/partition.hpp"

namespace orbigraph {

// .obg text: a header line "n k", then n rows of n nonnegative integers.
// '#' starts a comment. Text whose first non-space character is '{' is read
// as JSON ({"k": ..., "adjacency": [[...]]}). Throws SyntaxError with line and
// column, or the validation error with its line.
Orbigraph parse_orbigraph(std::string_view text, bool allow_disconnected = false);
std::string serialize_orbigraph(const Orbigraph& g);

nlohmann::json orbigraph_to_json(const Orbigraph& g);
Orbigraph orbigraph_from_json(const nlohmann::json& j, bool allow_disconnected = false);

// .part text: one cell per line, space-separated 0-based vertex indices.
VertexPartition parse_partition(std::string_view text, std::size_t vertex_count);
std::string serialize_partition(const VertexPartition& p);

struct DotOptions {
  bool suppress_unit_labels = true;
  bool highlight_singular = true;
};

std::string export_dot(const Orbigraph& g, const DotOptions& options = {});

}  // namespace orbigraph
