#include "srslint/relations.hpp"

#include "srslint/document.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace srslint {

std::string_view relation_name(RelationKind k) {
    switch (k) {
    case RelationKind::Disjoins: return "DISJOINS";
    case RelationKind::Belongs: return "BELONGS";
    case RelationKind::Repeats: return "REPEATS";
    case RelationKind::Contradicts: return "CONTRADICTS";
    case RelationKind::Follows: return "FOLLOWS";
    case RelationKind::Extends: return "EXTENDS";
    case RelationKind::Excepts: return "EXCEPTS";
    case RelationKind::Constrains: return "CONSTRAINS";
    case RelationKind::Characterizes: return "CHARACTERIZES";
    case RelationKind::Details: return "DETAILS";
    case RelationKind::Shares: return "SHARES";
    case RelationKind::Duplicates: return "DUPLICATES";
    case RelationKind::Explains: return "EXPLAINS";
    }
    return "DISJOINS";
}

std::optional<RelationKind> relation_from_name(std::string_view name) {
    for (RelationKind k : all_relation_kinds)
        if (relation_name(k) == name) return k;
    return std::nullopt;
}

std::string relation_reading(const RelationEdge& e) {
    switch (e.kind) {
    case RelationKind::Disjoins: return e.x + " and " + e.y + " are unrelated";
    case RelationKind::Belongs: return e.x + " is textually included in " + e.y;
    case RelationKind::Repeats: return e.x + " states the same property as " + e.y;
    case RelationKind::Contradicts: return e.x + " cannot hold together with " + e.y;
    case RelationKind::Follows:
        return e.x + " is a consequence of the property specified by " + e.y;
    case RelationKind::Extends: return e.x + " assumes " + e.y + " and adds a new property";
    case RelationKind::Excepts: return e.x + " makes an exception to " + e.y;
    case RelationKind::Constrains: return e.x + " constrains a property of " + e.y;
    case RelationKind::Characterizes: return e.x + " is a meta-requirement about " + e.y;
    case RelationKind::Details: return e.x + " adds detail to " + e.y;
    case RelationKind::Shares:
        return e.x + " and " + e.y + " have sub-requirements stating the same property";
    case RelationKind::Duplicates: return e.x + " restates " + e.y + " in the same notation";
    case RelationKind::Explains: return e.x + " restates " + e.y + " in a different notation";
    }
    return e.x + " relates to " + e.y;
}

bool is_primary_kind(RelationKind k) {
    switch (k) {
    case RelationKind::Details:
    case RelationKind::Shares:
    case RelationKind::Duplicates:
    case RelationKind::Explains: return false;
    default: return true;
    }
}

bool is_symmetric_kind(RelationKind k) {
    switch (k) {
    case RelationKind::Disjoins:
    case RelationKind::Repeats:
    case RelationKind::Contradicts:
    case RelationKind::Shares:
    case RelationKind::Duplicates:
    case RelationKind::Explains: return true;
    default: return false;
    }
}

namespace {

Diagnostic structure_diag(std::string rule, Severity sev, std::vector<std::string> subjects,
                          std::string message, SourceLocation loc = {}) {
    Diagnostic d;
    d.rule = std::move(rule);
    d.severity = sev;
    d.subjects = std::move(subjects);
    d.message = std::move(message);
    d.location = loc;
    return d;
}

} // namespace

std::vector<Diagnostic> validate_edge(const RelationEdge& e, const SrsDocument& doc) {
    return validate_edge(e, ElementIndex(doc));
}

std::vector<Diagnostic> validate_edge(const RelationEdge& e, const ElementIndex& index) {
    std::vector<Diagnostic> out;
    const RequirementElement* ex = index.find(e.x);
    const RequirementElement* ey = index.find(e.y);
    if (ex == nullptr || ey == nullptr) {
        out.push_back(structure_diag(
            "R2", Severity::Error, {e.x, e.y},
            std::string(relation_name(e.kind)) + " endpoint does not resolve to an element",
            e.location));
        return out;
    }

    switch (e.kind) {
    case RelationKind::Characterizes:
        if (ex->classification.category != CategoryLabel::MetaRequirement)
            out.push_back(structure_diag(
                "R2", Severity::Error, {e.x, e.y},
                "CHARACTERIZES: x must be a meta-requirement (" + e.x + " is " +
                    std::string(category_display(ex->classification.category)) + ")",
                e.location));
        break;
    case RelationKind::Constrains:
        if (ex->classification.category != CategoryLabel::Constraint)
            out.push_back(structure_diag(
                "R2", Severity::Error, {e.x, e.y},
                "CONSTRAINS: x must be a constraint (" + e.x + " is " +
                    std::string(category_display(ex->classification.category)) + ")",
                e.location));
        break;
    case RelationKind::Belongs:
        // A declared BELONGS restates textual inclusion and must agree with
        // the indentation structure.
        if (e.provenance == Provenance::Declared && !index.is_ancestor(e.y, e.x))
            out.push_back(structure_diag("R2", Severity::Error, {e.x, e.y},
                                         "declared BELONGS does not match document nesting (" +
                                             e.x + " is not nested under " + e.y + ")",
                                         e.location));
        break;
    default: break; // all other kinds are category-unrestricted
    }
    return out;
}

std::vector<RelationEdge> normalize_symmetry(std::vector<RelationEdge> edges) {
    for (RelationEdge& e : edges)
        if (is_symmetric_kind(e.kind) && e.y < e.x) std::swap(e.x, e.y);

    std::vector<RelationEdge> out;
    std::set<std::tuple<std::string, std::string, RelationKind>> seen;
    for (RelationEdge& e : edges) {
        if (is_symmetric_kind(e.kind) && !seen.insert({e.x, e.y, e.kind}).second) continue;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RelationEdge> derive_belongs(const SrsDocument& doc) {
    std::vector<RelationEdge> out;
    std::function<void(const RequirementElement&)> walk = [&](const RequirementElement& parent) {
        for (const RequirementElement& child : parent.children) {
            RelationEdge e;
            e.x = child.id;
            e.y = parent.id;
            e.kind = RelationKind::Belongs;
            e.provenance = Provenance::Derived;
            out.push_back(std::move(e));
            walk(child);
        }
    };
    for (const RequirementElement& r : doc.roots) walk(r);
    return out;
}

namespace {

/// Chain of ids from an element up to its root, element itself included.
std::vector<std::string> ancestors_or_self(const ElementIndex& index, const std::string& id) {
    std::vector<std::string> chain{id};
    for (std::string cur = index.parent_of(id); !cur.empty(); cur = index.parent_of(cur))
        chain.push_back(cur);
    return chain;
}

std::vector<RelationEdge> normalized_repeats(const SrsDocument& doc) {
    std::vector<RelationEdge> repeats;
    for (const RelationEdge& e : doc.declared_edges)
        if (e.kind == RelationKind::Repeats) repeats.push_back(e);
    return normalize_symmetry(std::move(repeats));
}

} // namespace

std::vector<RelationEdge> derive_shares(const SrsDocument& doc) {
    ElementIndex index(doc);
    std::set<std::pair<std::string, std::string>> pairs;
    for (const RelationEdge& rep : normalized_repeats(doc)) {
        if (!index.contains(rep.x) || !index.contains(rep.y)) continue;
        for (const std::string& a : ancestors_or_self(index, rep.x)) {
            for (const std::string& b : ancestors_or_self(index, rep.y)) {
                if (a == b) continue;
                if (index.is_ancestor(a, b) || index.is_ancestor(b, a)) continue;
                pairs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
            }
        }
    }
    std::vector<RelationEdge> out;
    for (const auto& [a, b] : pairs) {
        RelationEdge e;
        e.x = a;
        e.y = b;
        e.kind = RelationKind::Shares;
        e.provenance = Provenance::Derived;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<RelationEdge> refine_repeats(const SrsDocument& doc) {
    ElementIndex index(doc);
    std::vector<RelationEdge> out;
    for (const RelationEdge& rep : normalized_repeats(doc)) {
        const RequirementElement* ex = index.find(rep.x);
        const RequirementElement* ey = index.find(rep.y);
        RelationEdge e = rep;
        e.provenance = Provenance::Derived;
        // Unresolvable endpoints keep the edge in the EXPLAINS bucket so the
        // partition invariant holds even for broken documents.
        bool same_notation = ex != nullptr && ey != nullptr && ex->notation == ey->notation;
        e.kind = same_notation ? RelationKind::Duplicates : RelationKind::Explains;
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

/// Strongly connected components over the given edges; every component with
/// more than one node is a cycle (self-edges cannot occur).
std::vector<std::vector<std::string>> find_cycles(
    const std::map<std::string, std::vector<std::string>>& adj) {
    // Iterative Tarjan.
    std::map<std::string, int> number, lowlink;
    std::vector<std::string> stack;
    std::set<std::string> on_stack;
    std::vector<std::vector<std::string>> cycles;
    int counter = 0;

    struct Frame {
        std::string node;
        std::size_t next_child = 0;
    };

    for (const auto& [start, _] : adj) {
        if (number.count(start)) continue;
        std::vector<Frame> frames{{start}};
        number[start] = lowlink[start] = counter++;
        stack.push_back(start);
        on_stack.insert(start);

        while (!frames.empty()) {
            Frame& f = frames.back();
            auto it = adj.find(f.node);
            bool descended = false;
            while (it != adj.end() && f.next_child < it->second.size()) {
                const std::string& child = it->second[f.next_child++];
                if (!number.count(child)) {
                    number[child] = lowlink[child] = counter++;
                    stack.push_back(child);
                    on_stack.insert(child);
                    frames.push_back({child});
                    descended = true;
                    break;
                }
                if (on_stack.count(child))
                    lowlink[f.node] = std::min(lowlink[f.node], number[child]);
            }
            if (descended) continue;

            if (lowlink[f.node] == number[f.node]) {
                std::vector<std::string> comp;
                while (true) {
                    std::string n = stack.back();
                    stack.pop_back();
                    on_stack.erase(n);
                    comp.push_back(n);
                    if (n == f.node) break;
                }
                if (comp.size() > 1) {
                    std::sort(comp.begin(), comp.end());
                    cycles.push_back(std::move(comp));
                }
            }
            std::string done = f.node;
            frames.pop_back();
            if (!frames.empty())
                lowlink[frames.back().node] =
                    std::min(lowlink[frames.back().node], lowlink[done]);
        }
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const std::string& id : ids) {
        if (!out.empty()) out += ", ";
        out += id;
    }
    return out;
}

} // namespace

std::vector<Diagnostic> check_structure(const SrsDocument& doc) {
    std::vector<Diagnostic> out;

    // (a) at most one declared primary relation per unordered pair
    std::map<std::pair<std::string, std::string>, std::set<RelationKind>> primaries;
    std::map<std::pair<std::string, std::string>, SourceLocation> first_loc;
    auto unordered = [](const RelationEdge& e) {
        return e.x < e.y ? std::make_pair(e.x, e.y) : std::make_pair(e.y, e.x);
    };
    for (const RelationEdge& e : doc.declared_edges) {
        if (!is_primary_kind(e.kind)) continue;
        auto key = unordered(e);
        primaries[key].insert(e.kind);
        first_loc.emplace(key, e.location);
    }
    for (const auto& [pair, kinds] : primaries) {
        if (kinds.size() < 2) continue;
        std::string names;
        for (RelationKind k : kinds) {
            if (!names.empty()) names += ", ";
            names += relation_name(k);
        }
        out.push_back(structure_diag("R7", Severity::Error, {pair.first, pair.second},
                                     "pair related by " + std::to_string(kinds.size()) +
                                         " primary relations (" + names +
                                         "); at most one is allowed",
                                     first_loc[pair]));
    }

    // (d) DISJOINS declares the pair unrelated; any co-declared kind conflicts
    std::map<std::pair<std::string, std::string>, std::set<RelationKind>> all_kinds;
    for (const RelationEdge& e : doc.declared_edges) all_kinds[unordered(e)].insert(e.kind);
    for (const auto& [pair, kinds] : all_kinds) {
        if (!kinds.count(RelationKind::Disjoins) || kinds.size() < 2) continue;
        out.push_back(structure_diag("R7", Severity::Error, {pair.first, pair.second},
                                     "pair declared DISJOINS (unrelated) but also related by "
                                     "another declared kind",
                                     first_loc.count(pair) ? first_loc[pair] : SourceLocation{}));
    }

    // (b) BELONGS must stay a forest; include derived nesting edges so a
    // declared edge closing a loop through the tree is caught too.
    std::map<std::string, std::vector<std::string>> belongs_adj;
    for (const RelationEdge& e : doc.declared_edges)
        if (e.kind == RelationKind::Belongs) belongs_adj[e.x].push_back(e.y);
    for (const RelationEdge& e : derive_belongs(doc)) belongs_adj[e.x].push_back(e.y);
    for (const auto& cycle : find_cycles(belongs_adj))
        out.push_back(structure_diag("R7", Severity::Error, cycle,
                                     "BELONGS cycle: textual inclusion cannot loop (" +
                                         join_ids(cycle) + ")"));

    // (c) EXTENDS/DETAILS cycles are suspicious but not formally forbidden
    std::map<std::string, std::vector<std::string>> extends_adj;
    for (const RelationEdge& e : doc.declared_edges)
        if (e.kind == RelationKind::Extends || e.kind == RelationKind::Details)
            extends_adj[e.x].push_back(e.y);
    for (const auto& cycle : find_cycles(extends_adj))
        out.push_back(structure_diag("R7", Severity::Warning, cycle,
                                     "EXTENDS/DETAILS cycle (" + join_ids(cycle) + ")"));

    return out;
}

} // namespace srslint
