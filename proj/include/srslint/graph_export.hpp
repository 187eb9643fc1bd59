#pragma once

#include "srslint/document.hpp"

#include <string>

namespace srslint {

/// Valid DOT digraph: one node per element labelled "id\ncategory", one edge
/// per declared (and, by default, derived) relation labelled with its kind.
/// Derived edges are dashed and marked.
std::string graph_to_dot(const SrsDocument& doc, bool include_derived = true);

/// JSON graph listing nodes and edges with provenance.
std::string graph_to_json(const SrsDocument& doc, bool include_derived = true);

} // namespace srslint
