#include "srslint/linker.hpp"

#include <algorithm>

namespace srslint {

std::vector<Diagnostic> link(const SrsDocument& doc) {
    std::vector<Diagnostic> out;
    ElementIndex index(doc);
    for (const RelationEdge& e : doc.declared_edges) {
        auto diags = validate_edge(e, index);
        out.insert(out.end(), diags.begin(), diags.end());
    }
    sort_diagnostics(out);
    return out;
}

std::vector<RelationEdge> all_edges(const SrsDocument& doc, bool include_derived) {
    std::vector<RelationEdge> out = doc.declared_edges;
    if (include_derived) {
        for (auto&& derive : {derive_belongs(doc), refine_repeats(doc), derive_shares(doc)}) {
            out.insert(out.end(), derive.begin(), derive.end());
        }
    }
    // declared first in document order, then derived in canonical order
    std::stable_sort(out.begin(), out.end(), [](const RelationEdge& a, const RelationEdge& b) {
        if (a.provenance != b.provenance) return a.provenance == Provenance::Declared;
        if (a.provenance == Provenance::Derived) return edge_less(a, b);
        return false;
    });
    return out;
}

} // namespace srslint
