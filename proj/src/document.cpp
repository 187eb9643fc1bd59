#include "srslint/document.hpp"

#include <algorithm>

namespace srslint {

bool edge_less(const RelationEdge& a, const RelationEdge& b) {
    if (a.x != b.x) return a.x < b.x;
    auto ka = relation_name(a.kind), kb = relation_name(b.kind);
    if (ka != kb) return ka < kb;
    return a.y < b.y;
}

bool operator==(const SrsDocument& a, const SrsDocument& b) {
    if (a.title != b.title || a.notation_decls != b.notation_decls ||
        !(a.glossary == b.glossary) || !(a.roots == b.roots))
        return false;
    // Edge file order carries no meaning; compare canonically sorted copies.
    auto ea = a.declared_edges, eb = b.declared_edges;
    std::sort(ea.begin(), ea.end(), edge_less);
    std::sort(eb.begin(), eb.end(), edge_less);
    return ea == eb;
}

namespace {

void index_walk(const RequirementElement& e, const std::string& parent,
                std::map<std::string, const RequirementElement*>& by_id,
                std::map<std::string, std::string>& parents, std::vector<std::string>& order) {
    by_id.emplace(e.id, &e);
    parents.emplace(e.id, parent);
    order.push_back(e.id);
    for (const RequirementElement& c : e.children) index_walk(c, e.id, by_id, parents, order);
}

} // namespace

ElementIndex::ElementIndex(const SrsDocument& doc) {
    for (const RequirementElement& r : doc.roots) index_walk(r, "", by_id_, parent_, order_);
}

const RequirementElement* ElementIndex::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : it->second;
}

const std::string& ElementIndex::parent_of(const std::string& id) const {
    static const std::string empty;
    auto it = parent_.find(id);
    return it == parent_.end() ? empty : it->second;
}

bool ElementIndex::is_ancestor(const std::string& ancestor, const std::string& id) const {
    for (std::string cur = parent_of(id); !cur.empty(); cur = parent_of(cur))
        if (cur == ancestor) return true;
    return false;
}

void for_each_element(const SrsDocument& doc,
                      const std::function<void(const RequirementElement&)>& fn) {
    std::function<void(const RequirementElement&)> walk = [&](const RequirementElement& e) {
        fn(e);
        for (const RequirementElement& c : e.children) walk(c);
    };
    for (const RequirementElement& r : doc.roots) walk(r);
}

std::size_t element_count(const SrsDocument& doc) {
    std::size_t n = 0;
    for_each_element(doc, [&](const RequirementElement&) { ++n; });
    return n;
}

} // namespace srslint
