#include "srslint/taxonomy.hpp"

#include "srslint/element.hpp"
#include "support/generator.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace srslint;

namespace {

Classification make(CategoryLabel cat) {
    Classification c;
    c.category = cat;
    return c;
}

RequirementElement elem(std::string id, CategoryLabel cat) {
    RequirementElement e;
    e.id = std::move(id);
    e.classification.category = cat;
    return e;
}

} // namespace

TEST_CASE("constraint with nature and source is valid") {
    Classification c = make(CategoryLabel::Constraint);
    c.nature = ConstraintNature::Assumption;
    c.source = ConstraintSource::BusinessRule;
    CHECK(validate_classification(c).empty());
}

TEST_CASE("subcategory on the wrong category names the offender") {
    Classification c = make(CategoryLabel::Goal);
    c.subcategory = GeneralSubcategory::Actor;
    auto diags = validate_classification(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("actor requires Component") != std::string::npos);
}

TEST_CASE("functional behavior is valid") {
    Classification c = make(CategoryLabel::Behavior);
    c.subcategory = GeneralSubcategory::Functional;
    CHECK(validate_classification(c).empty());
}

TEST_CASE("nature slot is constraint-only") {
    Classification c = make(CategoryLabel::Component);
    c.nature = ConstraintNature::Obligation;
    auto diags = validate_classification(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("nature slot is constraint-only") != std::string::npos);
}

TEST_CASE("source slot is constraint-only") {
    Classification c = make(CategoryLabel::Task);
    c.source = ConstraintSource::PhysicalRule;
    auto diags = validate_classification(c);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("source slot") != std::string::npos);
}

TEST_CASE("bare constraint is structurally valid; refinement is lint's business") {
    CHECK(validate_classification(make(CategoryLabel::Constraint)).empty());
}

TEST_CASE("subcategory compatibility is a total function over the enumeration") {
    for (GeneralSubcategory s : all_general_subcategories) {
        CategoryLabel parent = compatible_category(s);
        Classification good = make(parent);
        good.subcategory = s;
        CHECK(validate_classification(good).empty());
        for (CategoryLabel other : all_categories) {
            if (other == parent) continue;
            Classification bad = make(other);
            bad.subcategory = s;
            CHECK_FALSE(validate_classification(bad).empty());
        }
    }
}

TEST_CASE("validator agrees with the independent table oracle, exhaustively and randomly") {
    // exhaustive over every representable combination
    std::vector<std::optional<GeneralSubcategory>> subs{std::nullopt};
    for (auto s : all_general_subcategories) subs.emplace_back(s);
    std::vector<std::optional<ConstraintNature>> natures{std::nullopt};
    for (auto n : all_constraint_natures) natures.emplace_back(n);
    std::vector<std::optional<ConstraintSource>> sources{std::nullopt};
    for (auto s : all_constraint_sources) sources.emplace_back(s);

    int checked = 0;
    for (CategoryLabel cat : all_categories) {
        for (auto sub : subs) {
            for (auto nat : natures) {
                for (auto src : sources) {
                    Classification c;
                    c.category = cat;
                    c.subcategory = sub;
                    c.nature = nat;
                    c.source = src;
                    CHECK(validate_classification(c).empty() ==
                          srslint::testing::oracle_classification_valid(c));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked == 10 * 7 * 4 * 4);

    std::mt19937 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        Classification c = srslint::testing::generate_classification(rng);
        CHECK(validate_classification(c).empty() ==
              srslint::testing::oracle_classification_valid(c));
    }
}

TEST_CASE("heterogeneity looks at direct children's basic categories") {
    RequirementElement parent = elem("p", CategoryLabel::Behavior);

    SUBCASE("children of one category are homogeneous") {
        parent.children = {elem("a", CategoryLabel::Behavior), elem("b", CategoryLabel::Behavior)};
        CHECK_FALSE(is_heterogeneous(parent));
    }
    SUBCASE("component plus behavior is heterogeneous") {
        parent.children = {elem("a", CategoryLabel::Component), elem("b", CategoryLabel::Behavior)};
        CHECK(is_heterogeneous(parent));
    }
    SUBCASE("a single child is trivially uniform") {
        parent.children = {elem("a", CategoryLabel::Limit)};
        CHECK_FALSE(is_heterogeneous(parent));
    }
    SUBCASE("section titles and lacks do not count") {
        parent.children = {elem("a", CategoryLabel::MetaRequirement),
                           elem("b", CategoryLabel::Goal), elem("c", CategoryLabel::Lack),
                           elem("d", CategoryLabel::Goal)};
        CHECK_FALSE(is_heterogeneous(parent));
    }
    SUBCASE("meta-only children are vacuously homogeneous") {
        parent.children = {elem("a", CategoryLabel::MetaRequirement),
                           elem("b", CategoryLabel::MetaRequirement)};
        CHECK_FALSE(is_heterogeneous(parent));
    }
}

TEST_CASE("single-category composites are never heterogeneous (property)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> cat(0, all_categories.size() - 1);
    std::uniform_int_distribution<int> nchild(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        CategoryLabel one = all_categories[cat(rng)];
        RequirementElement parent = elem("p", CategoryLabel::Goal);
        int n = nchild(rng);
        for (int i = 0; i < n; ++i) parent.children.push_back(elem("c" + std::to_string(i), one));
        CHECK_FALSE(is_heterogeneous(parent));
    }
}

TEST_CASE("glossary folds case and whitespace") {
    Glossary g;
    CHECK(g.insert("Sales Agent", "an SBE employee who sells"));
    CHECK_FALSE(g.insert("sales   agent", "duplicate"));
    CHECK(g.contains("SALES AGENT"));
    CHECK(g.contains("sales agent"));
    CHECK_FALSE(g.contains("sales"));
}
