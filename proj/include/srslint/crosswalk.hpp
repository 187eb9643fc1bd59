#pragma once

#include "srslint/taxonomy.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace srslint {

/// One row of an external-vocabulary mapping: the category this
/// classification assigns to the external label, plus an optional
/// qualifying note. Ambiguous source rows map to the first-listed category
/// with the alternative in the note.
struct CrosswalkEntry {
    std::string_view label;
    CategoryLabel category;
    std::string_view note; // empty when the source table has no comment
};

/// Wiegers-Beatty requirement kinds -> categories. Lookup is
/// case-insensitive; returns nullptr for labels outside the table.
const CrosswalkEntry* crosswalk_wb(std::string_view wb_label);

/// van Lamsweerde requirement categories and related artifacts -> categories.
const CrosswalkEntry* crosswalk_avl(std::string_view avl_label);

/// Full tables, in source order, for exhaustive listings and error messages.
const std::vector<CrosswalkEntry>& wb_table();
const std::vector<CrosswalkEntry>& avl_table();

} // namespace srslint
