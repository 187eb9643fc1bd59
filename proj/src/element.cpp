#include "srslint/element.hpp"

#include <cassert>
#include <cctype>

namespace srslint {

const std::set<NotationTag>& canonical_notations() {
    static const std::set<NotationTag> tags = {
        NotationTag{"text"},    NotationTag{"diagram"}, NotationTag{"table"},
        NotationTag{"formula"}, NotationTag{"code"},
    };
    return tags;
}

bool is_heterogeneous(const RequirementElement& e) {
    assert(e.is_composite() && "heterogeneity is defined on composites only");
    bool seen = false;
    CategoryLabel first = CategoryLabel::Behavior;
    for (const RequirementElement& child : e.children) {
        CategoryLabel c = child.classification.category;
        // Section titles and recorded lacks do not state system properties
        // and are left out of the judgment.
        if (c == CategoryLabel::Lack || c == CategoryLabel::MetaRequirement) continue;
        if (!seen) {
            seen = true;
            first = c;
        } else if (c != first) {
            return true;
        }
    }
    return false;
}

std::string Glossary::fold(std::string_view term) {
    std::string out;
    out.reserve(term.size());
    bool pending_space = false;
    for (char ch : term) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

bool Glossary::insert(std::string_view term, std::string_view definition) {
    return entries_.emplace(fold(term), std::string(definition)).second;
}

bool Glossary::contains(std::string_view term) const {
    return entries_.count(fold(term)) > 0;
}

} // namespace srslint
