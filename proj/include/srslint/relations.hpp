#pragma once

#include "srslint/diagnostics.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srslint {

struct SrsDocument;

/// The nine primary relation kinds plus the four derived ones. DETAILS is a
/// case of EXTENDS; DUPLICATES and EXPLAINS are cases of REPEATS; SHARES is
/// defined through REPEATS on sub-requirements.
enum class RelationKind : std::uint8_t {
    // primary
    Disjoins,
    Belongs,
    Repeats,
    Contradicts,
    Follows,
    Extends,
    Excepts,
    Constrains,
    Characterizes,
    // derived
    Details,
    Shares,
    Duplicates,
    Explains,
};

inline constexpr std::array<RelationKind, 13> all_relation_kinds = {
    RelationKind::Disjoins,    RelationKind::Belongs,  RelationKind::Repeats,
    RelationKind::Contradicts, RelationKind::Follows,  RelationKind::Extends,
    RelationKind::Excepts,     RelationKind::Constrains, RelationKind::Characterizes,
    RelationKind::Details,     RelationKind::Shares,   RelationKind::Duplicates,
    RelationKind::Explains,
};

/// Upper-case wire name, e.g. "REPEATS".
std::string_view relation_name(RelationKind k);
std::optional<RelationKind> relation_from_name(std::string_view name);

bool is_primary_kind(RelationKind k);

/// A symmetric kind relates an unordered pair; normalize_symmetry stores it
/// once under canonical (lexicographic) endpoint order.
bool is_symmetric_kind(RelationKind k);

enum class Provenance : std::uint8_t { Declared, Derived };

/// Directed typed edge between two element ids. x is the first operand of
/// the relation (e.g. CONSTRAINS: x specifies a constraint on a property
/// specified by y). Self-edges are rejected at parse time; provenance and
/// location take no part in identity.
struct RelationEdge {
    std::string x;
    std::string y;
    RelationKind kind = RelationKind::Disjoins;
    Provenance provenance = Provenance::Declared;
    SourceLocation location;

    friend bool operator==(const RelationEdge& a, const RelationEdge& b) {
        return a.x == b.x && a.y == b.y && a.kind == b.kind;
    }
};

/// (x, kind, y) ordering used everywhere a stable edge order is needed.
bool edge_less(const RelationEdge& a, const RelationEdge& b);

/// Human reading of one edge with the operand order spelled out, so the
/// direction of asymmetric kinds cannot drift: FOLLOWS(x, y) always prints
/// as "x is a consequence of the property specified by y".
std::string relation_reading(const RelationEdge& e);

class ElementIndex;

/// Endpoint-typing checks for one declared edge:
///   - CHARACTERIZES: x must be a meta-requirement;
///   - CONSTRAINS: x must be a constraint;
///   - declared BELONGS must coincide with the document's textual nesting
///     (x a direct or transitive child of y).
/// All other kinds are category-unrestricted. Endpoints must resolve.
std::vector<Diagnostic> validate_edge(const RelationEdge& e, const SrsDocument& doc);

/// Same checks against a prebuilt index, for callers validating many edges.
std::vector<Diagnostic> validate_edge(const RelationEdge& e, const ElementIndex& index);

/// Canonicalizes symmetric kinds to lexicographic endpoint order and stores
/// each unordered pair once; directed kinds pass through untouched.
/// Idempotent.
std::vector<RelationEdge> normalize_symmetry(std::vector<RelationEdge> edges);

/// One Derived BELONGS edge (child, parent) per direct nesting link in the
/// element forest. Transitive links are not emitted.
std::vector<RelationEdge> derive_belongs(const SrsDocument& doc);

/// SHARES(X, Y) for every unordered pair of distinct elements such that some
/// descendant-or-self X' of X and Y' of Y satisfy a declared REPEATS(X', Y'),
/// excluding pairs where one element is a descendant of the other (BELONGS
/// already relates those). Output is canonically ordered and deduplicated.
std::vector<RelationEdge> derive_shares(const SrsDocument& doc);

/// Annotates every declared REPEATS edge with exactly one refined kind:
/// DUPLICATES iff the two endpoints use the same notation, EXPLAINS
/// otherwise. The result partitions the normalized REPEATS set.
std::vector<RelationEdge> refine_repeats(const SrsDocument& doc);

/// Structural checks over the declared edge set:
///   (a) an unordered pair related by two or more declared primary kinds;
///   (b) a cycle in the BELONGS graph (error);
///   (c) a cycle in the EXTENDS/DETAILS graph (warning);
///   (d) a pair declared DISJOINS and also declared under any other kind.
std::vector<Diagnostic> check_structure(const SrsDocument& doc);

} // namespace srslint
