#include "srslint/taxonomy.hpp"

#include <algorithm>

namespace srslint {

std::string_view severity_name(Severity s) {
    switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
    }
    return "error";
}

void sort_diagnostics(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        if (a.location.file != b.location.file) return a.location.file < b.location.file;
        if (a.location.line != b.location.line) return a.location.line < b.location.line;
        if (a.rule != b.rule) return a.rule < b.rule;
        return a.message < b.message;
    });
}

std::string_view category_keyword(CategoryLabel c) {
    switch (c) {
    case CategoryLabel::Behavior: return "behavior";
    case CategoryLabel::Component: return "component";
    case CategoryLabel::Constraint: return "constraint";
    case CategoryLabel::Goal: return "goal";
    case CategoryLabel::Lack: return "lack";
    case CategoryLabel::Limit: return "limit";
    case CategoryLabel::MetaRequirement: return "meta";
    case CategoryLabel::Product: return "product";
    case CategoryLabel::Role: return "role";
    case CategoryLabel::Task: return "task";
    }
    return "behavior";
}

std::string_view category_display(CategoryLabel c) {
    switch (c) {
    case CategoryLabel::Behavior: return "Behavior";
    case CategoryLabel::Component: return "Component";
    case CategoryLabel::Constraint: return "Constraint";
    case CategoryLabel::Goal: return "Goal";
    case CategoryLabel::Lack: return "Lack";
    case CategoryLabel::Limit: return "Limit";
    case CategoryLabel::MetaRequirement: return "Meta-requirement";
    case CategoryLabel::Product: return "Product";
    case CategoryLabel::Role: return "Role";
    case CategoryLabel::Task: return "Task";
    }
    return "Behavior";
}

std::optional<CategoryLabel> category_from_keyword(std::string_view kw) {
    for (CategoryLabel c : all_categories)
        if (category_keyword(c) == kw) return c;
    return std::nullopt;
}

std::string_view subcategory_keyword(GeneralSubcategory s) {
    switch (s) {
    case GeneralSubcategory::Actor: return "actor";
    case GeneralSubcategory::Justification: return "justification";
    case GeneralSubcategory::Obstacle: return "obstacle";
    case GeneralSubcategory::Responsibility: return "responsibility";
    case GeneralSubcategory::Functional: return "functional";
    case GeneralSubcategory::NonFunctional: return "non-functional";
    }
    return "actor";
}

std::string_view nature_keyword(ConstraintNature n) {
    switch (n) {
    case ConstraintNature::Assumption: return "assumption";
    case ConstraintNature::Obligation: return "obligation";
    case ConstraintNature::Invariant: return "invariant";
    }
    return "assumption";
}

std::string_view source_keyword(ConstraintSource s) {
    switch (s) {
    case ConstraintSource::BusinessRule: return "business-rule";
    case ConstraintSource::EngineeringDecision: return "engineering-decision";
    case ConstraintSource::PhysicalRule: return "physical-rule";
    }
    return "business-rule";
}

std::optional<GeneralSubcategory> subcategory_from_keyword(std::string_view kw) {
    for (GeneralSubcategory s : all_general_subcategories)
        if (subcategory_keyword(s) == kw) return s;
    return std::nullopt;
}

std::optional<ConstraintNature> nature_from_keyword(std::string_view kw) {
    for (ConstraintNature n : all_constraint_natures)
        if (nature_keyword(n) == kw) return n;
    return std::nullopt;
}

std::optional<ConstraintSource> source_from_keyword(std::string_view kw) {
    for (ConstraintSource s : all_constraint_sources)
        if (source_keyword(s) == kw) return s;
    return std::nullopt;
}

CategoryLabel compatible_category(GeneralSubcategory s) {
    switch (s) {
    case GeneralSubcategory::Actor: return CategoryLabel::Component;
    case GeneralSubcategory::Justification: return CategoryLabel::MetaRequirement;
    case GeneralSubcategory::Obstacle: return CategoryLabel::Goal;
    case GeneralSubcategory::Responsibility: return CategoryLabel::Role;
    case GeneralSubcategory::Functional: return CategoryLabel::Behavior;
    case GeneralSubcategory::NonFunctional: return CategoryLabel::Behavior;
    }
    return CategoryLabel::Component;
}

std::vector<Diagnostic> validate_classification(const Classification& c,
                                                const std::string& subject,
                                                const SourceLocation& location) {
    std::vector<Diagnostic> out;
    auto emit = [&](std::string message) {
        Diagnostic d;
        d.rule = "R1";
        d.severity = Severity::Error;
        if (!subject.empty()) d.subjects.push_back(subject);
        d.message = std::move(message);
        d.location = location;
        out.push_back(std::move(d));
    };

    if (c.subcategory) {
        CategoryLabel wanted = compatible_category(*c.subcategory);
        if (c.category != wanted) {
            emit(std::string(subcategory_keyword(*c.subcategory)) + " requires " +
                 std::string(category_display(wanted)) + ", not " +
                 std::string(category_display(c.category)));
        }
    }
    if (c.nature && c.category != CategoryLabel::Constraint)
        emit("nature slot is constraint-only (category is " +
             std::string(category_display(c.category)) + ")");
    if (c.source && c.category != CategoryLabel::Constraint)
        emit("source slot is constraint-only (category is " +
             std::string(category_display(c.category)) + ")");
    return out;
}

} // namespace srslint
