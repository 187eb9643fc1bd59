#pragma once

#include "srslint/diagnostics.hpp"
#include "srslint/taxonomy.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace srslint {

/// The notation in which a statement expresses its property. A lowercase
/// token compared by exact equality; the canonical set is
/// {text, diagram, table, formula, code}, extensible per document via
/// `@notations`.
struct NotationTag {
    std::string value = "text";

    NotationTag() = default;
    explicit NotationTag(std::string v) : value(std::move(v)) {}

    friend auto operator<=>(const NotationTag&, const NotationTag&) = default;
};

const std::set<NotationTag>& canonical_notations();

/// One classified statement. Composite iff `children` is nonempty,
/// elementary otherwise. `location` is bookkeeping and takes no part in
/// value equality.
struct RequirementElement {
    std::string id;
    std::string text;
    NotationTag notation;
    Classification classification;
    std::vector<RequirementElement> children;
    SourceLocation location;

    bool is_composite() const { return !children.empty(); }

    friend bool operator==(const RequirementElement& a, const RequirementElement& b) {
        return a.id == b.id && a.text == b.text && a.notation == b.notation &&
               a.classification == b.classification && a.children == b.children;
    }
};

/// True iff the direct children of a composite do not all share one basic
/// category. Lack and meta-requirement children are ignored: a section title
/// inside a composite does not make it heterogeneous.
/// Pre: e.is_composite().
bool is_heterogeneous(const RequirementElement& e);

/// Term definitions local to one document. Terms are case-folded phrases,
/// unique after folding.
class Glossary {
public:
    /// Returns false (and leaves the glossary unchanged) if the folded term
    /// is already present.
    bool insert(std::string_view term, std::string_view definition);
    bool contains(std::string_view term) const;
    bool empty() const { return entries_.size() == 0; }
    std::size_t size() const { return entries_.size(); }

    /// Folded term -> definition, ordered by term.
    const std::map<std::string, std::string>& entries() const { return entries_; }

    friend bool operator==(const Glossary&, const Glossary&) = default;

    static std::string fold(std::string_view term);

private:
    std::map<std::string, std::string> entries_;
};

} // namespace srslint
