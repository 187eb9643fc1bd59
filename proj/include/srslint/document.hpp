#pragma once

#include "srslint/element.hpp"
#include "srslint/relations.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace srslint {

/// A whole annotated requirements document: the unit of parsing and
/// analysis. Edge endpoints resolve into the element forest; element
/// notation tags are canonical or declared in `notation_decls`.
///
/// Value equality ignores source locations, and declared edges compare as an
/// unordered collection (the renderer sorts them; their file order carries
/// no meaning).
struct SrsDocument {
    std::string title;
    std::set<NotationTag> notation_decls;
    Glossary glossary;
    std::vector<RequirementElement> roots;
    std::vector<RelationEdge> declared_edges;

    friend bool operator==(const SrsDocument& a, const SrsDocument& b);
};

/// Id -> element lookup plus parent links, built once per document.
class ElementIndex {
public:
    explicit ElementIndex(const SrsDocument& doc);

    const RequirementElement* find(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }

    /// Parent id, or empty for roots/unknown ids.
    const std::string& parent_of(const std::string& id) const;

    /// True iff `ancestor` appears on `id`'s parent chain (strict).
    bool is_ancestor(const std::string& ancestor, const std::string& id) const;

    /// Ids in document order.
    const std::vector<std::string>& ids() const { return order_; }

private:
    std::map<std::string, const RequirementElement*> by_id_;
    std::map<std::string, std::string> parent_;
    std::vector<std::string> order_;
};

/// Depth-first visit over the forest, parents before children.
void for_each_element(const SrsDocument& doc,
                      const std::function<void(const RequirementElement&)>& fn);

std::size_t element_count(const SrsDocument& doc);

} // namespace srslint
