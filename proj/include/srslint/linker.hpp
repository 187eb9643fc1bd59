#pragma once

#include "srslint/document.hpp"

#include <vector>

namespace srslint {

/// Resolves and validates all declared edges: dangling endpoints (possible
/// only on programmatically built documents; the parser rejects them),
/// endpoint-typing rules, and declared-BELONGS-vs-nesting agreement.
/// Diagnostic-producing; an empty result means the declared edge set is
/// sound.
std::vector<Diagnostic> link(const SrsDocument& doc);

/// Declared edges plus every derived edge (BELONGS from nesting, refined
/// REPEATS, SHARES), in stable order. What graph export and reports consume.
std::vector<RelationEdge> all_edges(const SrsDocument& doc, bool include_derived = true);

} // namespace srslint
