#include "srslint/graph_export.hpp"

#include "srslint/linker.hpp"

#include <json.hpp>

#include <sstream>

namespace srslint {

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string graph_to_dot(const SrsDocument& doc, bool include_derived) {
    std::ostringstream out;
    out << "digraph srs {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    for_each_element(doc, [&](const RequirementElement& e) {
        out << "  \"" << dot_escape(e.id) << "\" [label=\"" << dot_escape(e.id) << "\\n"
            << category_keyword(e.classification.category) << "\"];\n";
    });
    for (const RelationEdge& e : all_edges(doc, include_derived)) {
        out << "  \"" << dot_escape(e.x) << "\" -> \"" << dot_escape(e.y) << "\" [label=\""
            << relation_name(e.kind) << "\"";
        if (e.provenance == Provenance::Derived) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const SrsDocument& doc, bool include_derived) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    j["edges"] = nlohmann::json::array();
    for_each_element(doc, [&](const RequirementElement& e) {
        j["nodes"].push_back(
            {{"id", e.id},
             {"category", std::string(category_keyword(e.classification.category))}});
    });
    for (const RelationEdge& e : all_edges(doc, include_derived)) {
        j["edges"].push_back(
            {{"x", e.x},
             {"y", e.y},
             {"kind", std::string(relation_name(e.kind))},
             {"provenance", e.provenance == Provenance::Derived ? "derived" : "declared"},
             {"reading", relation_reading(e)}});
    }
    return j.dump(2) + "\n";
}

} // namespace srslint
