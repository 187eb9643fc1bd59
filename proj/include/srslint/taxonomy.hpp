#pragma once

#include "srslint/diagnostics.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace srslint {

/// The ten basic requirement categories. This is a closed set: there is no
/// extension point, and any statement a document classifies must use one of
/// these.
enum class CategoryLabel : std::uint8_t {
    Behavior,
    Component,
    Constraint,
    Goal,
    Lack,
    Limit,
    MetaRequirement,
    Product,
    Role,
    Task,
};

inline constexpr std::array<CategoryLabel, 10> all_categories = {
    CategoryLabel::Behavior,  CategoryLabel::Component, CategoryLabel::Constraint,
    CategoryLabel::Goal,      CategoryLabel::Lack,      CategoryLabel::Limit,
    CategoryLabel::MetaRequirement, CategoryLabel::Product, CategoryLabel::Role,
    CategoryLabel::Task,
};

/// Subcategories with a single fixed parent category.
enum class GeneralSubcategory : std::uint8_t {
    Actor,          // human component
    Justification,  // meta-requirement giving a rationale
    Obstacle,       // goal overcoming a negative environment property
    Responsibility, // human role
    Functional,     // behavior stating results or effects
    NonFunctional,  // behavior stating how results are achieved
};

inline constexpr std::array<GeneralSubcategory, 6> all_general_subcategories = {
    GeneralSubcategory::Actor,          GeneralSubcategory::Justification,
    GeneralSubcategory::Obstacle,       GeneralSubcategory::Responsibility,
    GeneralSubcategory::Functional,     GeneralSubcategory::NonFunctional,
};

/// Constraint-only classification by nature. A constraint is an obligation
/// if it is not also an assumption; Invariant is the both-roles case, so the
/// three values are disjoint by construction.
enum class ConstraintNature : std::uint8_t { Assumption, Obligation, Invariant };

/// Constraint-only classification by source. Orthogonal to the nature axis.
enum class ConstraintSource : std::uint8_t { BusinessRule, EngineeringDecision, PhysicalRule };

inline constexpr std::array<ConstraintNature, 3> all_constraint_natures = {
    ConstraintNature::Assumption, ConstraintNature::Obligation, ConstraintNature::Invariant,
};
inline constexpr std::array<ConstraintSource, 3> all_constraint_sources = {
    ConstraintSource::BusinessRule, ConstraintSource::EngineeringDecision,
    ConstraintSource::PhysicalRule,
};

// Keyword forms are the lowercase tokens used by the .srs grammar; display
// forms are for human-facing output.
std::string_view category_keyword(CategoryLabel c);
std::string_view category_display(CategoryLabel c);
std::optional<CategoryLabel> category_from_keyword(std::string_view kw);

std::string_view subcategory_keyword(GeneralSubcategory s);
std::string_view nature_keyword(ConstraintNature n);
std::string_view source_keyword(ConstraintSource s);

std::optional<GeneralSubcategory> subcategory_from_keyword(std::string_view kw);
std::optional<ConstraintNature> nature_from_keyword(std::string_view kw);
std::optional<ConstraintSource> source_from_keyword(std::string_view kw);

/// The fixed parent category of each general subcategory. Total over the
/// enumeration.
CategoryLabel compatible_category(GeneralSubcategory s);

/// One element's classification. The single `subcategory` slot holds the at
/// most one non-constraint subcategory; `nature`/`source` are the
/// constraint-only dual classification, each independently optional.
/// A Constraint with neither nature nor source is legal (R9 can flag it).
struct Classification {
    CategoryLabel category = CategoryLabel::Behavior;
    std::optional<GeneralSubcategory> subcategory;
    std::optional<ConstraintNature> nature;
    std::optional<ConstraintSource> source;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// Empty result iff `c` satisfies every classification invariant; otherwise
/// one diagnostic per violated invariant, each naming the offending slot.
/// `subject`/`location` seed the emitted diagnostics when the caller has
/// element context.
std::vector<Diagnostic> validate_classification(const Classification& c,
                                                const std::string& subject = {},
                                                const SourceLocation& location = {});

} // namespace srslint
