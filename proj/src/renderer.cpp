#include "srslint/renderer.hpp"

#include <algorithm>
#include <sstream>

namespace srslint {

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string classification_suffix(const Classification& c) {
    std::vector<std::string> parts;
    if (c.subcategory) parts.emplace_back(subcategory_keyword(*c.subcategory));
    if (c.nature) parts.emplace_back(nature_keyword(*c.nature));
    if (c.source) parts.emplace_back(source_keyword(*c.source));
    if (parts.empty()) return "";
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    out += ")";
    return out;
}

void render_element(const RequirementElement& e, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << '[' << e.id << "] "
        << category_keyword(e.classification.category)
        << classification_suffix(e.classification);
    if (e.notation.value != "text") out << ' ' << e.notation.value;
    out << " :: " << quoted(e.text) << '\n';
    for (const RequirementElement& c : e.children) render_element(c, depth + 1, out);
}

} // namespace

std::string render(const SrsDocument& doc) {
    std::vector<std::string> sections;

    if (!doc.title.empty()) sections.push_back("@document " + quoted(doc.title) + "\n");

    if (!doc.notation_decls.empty()) {
        std::string line = "@notations";
        for (const NotationTag& t : doc.notation_decls) line += " " + t.value;
        sections.push_back(line + "\n");
    }

    if (!doc.glossary.empty()) {
        std::ostringstream g;
        g << "@glossary\n";
        for (const auto& [term, def] : doc.glossary.entries())
            g << "term " << quoted(term) << ": " << quoted(def) << '\n';
        g << "@end\n";
        sections.push_back(g.str());
    }

    if (!doc.roots.empty()) {
        std::ostringstream body;
        for (const RequirementElement& r : doc.roots) render_element(r, 0, body);
        sections.push_back(body.str());
    }

    if (!doc.declared_edges.empty()) {
        auto edges = doc.declared_edges;
        std::sort(edges.begin(), edges.end(), edge_less);
        std::ostringstream rel;
        rel << "@relations\n";
        for (const RelationEdge& e : edges)
            rel << e.x << ' ' << relation_name(e.kind) << ' ' << e.y << '\n';
        rel << "@end\n";
        sections.push_back(rel.str());
    }

    std::string out;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (i) out += "\n";
        out += sections[i];
    }
    return out;
}

} // namespace srslint
