#include "srslint/crosswalk.hpp"

#include <doctest.h>

using namespace srslint;

namespace {

struct Row {
    const char* label;
    CategoryLabel category;
};

// Third-column mappings, frozen from the source tables.
constexpr Row wb_rows[] = {
    {"Business requirement", CategoryLabel::Goal},
    {"Business rule", CategoryLabel::Constraint},
    {"Constraint", CategoryLabel::Constraint},
    {"External interface requirement", CategoryLabel::Component},
    {"Feature", CategoryLabel::Behavior},
    {"Functional requirement", CategoryLabel::Behavior},
    {"Nonfunctional requirement", CategoryLabel::Constraint},
    {"Quality attribute", CategoryLabel::Constraint},
    {"System requirement", CategoryLabel::Component},
    {"User requirement", CategoryLabel::Goal},
};

constexpr Row avl_rows[] = {
    {"Functional requirements", CategoryLabel::Constraint},
    {"Non-functional requirements", CategoryLabel::Task},
    {"Quality requirements", CategoryLabel::Constraint},
    {"Compliance requirements", CategoryLabel::Constraint},
    {"Architectural requirements", CategoryLabel::Component},
    {"Development requirements", CategoryLabel::Task},
    {"Goals", CategoryLabel::Goal},
    {"Expectations", CategoryLabel::Goal},
    {"Domain properties", CategoryLabel::Constraint},
};

} // namespace

TEST_CASE("every Wiegers-Beatty row maps per the source table") {
    CHECK(wb_table().size() == std::size(wb_rows));
    for (const Row& row : wb_rows) {
        const CrosswalkEntry* e = crosswalk_wb(row.label);
        REQUIRE_MESSAGE(e != nullptr, row.label);
        CHECK_MESSAGE(e->category == row.category, row.label);
    }
}

TEST_CASE("every van Lamsweerde row maps per the source table") {
    CHECK(avl_table().size() == std::size(avl_rows));
    for (const Row& row : avl_rows) {
        const CrosswalkEntry* e = crosswalk_avl(row.label);
        REQUIRE_MESSAGE(e != nullptr, row.label);
        CHECK_MESSAGE(e->category == row.category, row.label);
    }
}

TEST_CASE("notes carry the qualifying comments") {
    CHECK(crosswalk_wb("Business requirement")->note == "Can also include limits");
    CHECK(crosswalk_wb("Feature")->note == "From viewpoint of actor (e.g. user)");
    CHECK(crosswalk_wb("Functional requirement")->note.empty());
    CHECK(crosswalk_avl("Development requirements")->note == "Can also be product");
    CHECK(crosswalk_avl("Domain properties")->note ==
          "Or Component if the property holds on a structural description");
    // ambiguous row: first-listed category wins, alternative in the note
    CHECK(crosswalk_avl("Functional requirements")->category == CategoryLabel::Constraint);
    CHECK(crosswalk_avl("Functional requirements")->note == "Or behavior");
}

TEST_CASE("lookups fold case") {
    CHECK(crosswalk_wb("business REQUIREMENT") != nullptr);
    CHECK(crosswalk_avl("expectations") != nullptr);
}

TEST_CASE("unknown labels return nothing") {
    CHECK(crosswalk_wb("Nonexistent") == nullptr);
    CHECK(crosswalk_avl("Business requirement") == nullptr); // wrong scheme
}
