#pragma once

#include "srslint/document.hpp"

#include <string>

namespace srslint {

/// Canonical text form: two-space indentation, constraint subcategories in
/// (nature, source) order, relations sorted by (x, kind, y), glossary sorted
/// by term, statements always quoted. parse(render(doc)) yields a document
/// equal to doc, and render is byte-stable across a round trip.
std::string render(const SrsDocument& doc);

} // namespace srslint
