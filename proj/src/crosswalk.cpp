#include "srslint/crosswalk.hpp"

#include <cctype>

namespace srslint {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

const CrosswalkEntry* find_entry(const std::vector<CrosswalkEntry>& table,
                                 std::string_view label) {
    std::string needle = lower(label);
    for (const CrosswalkEntry& e : table)
        if (lower(e.label) == needle) return &e;
    return nullptr;
}

} // namespace

const std::vector<CrosswalkEntry>& wb_table() {
    static const std::vector<CrosswalkEntry> table = {
        {"Business requirement", CategoryLabel::Goal, "Can also include limits"},
        {"Business rule", CategoryLabel::Constraint,
         "See also the business rule constraint subcategory"},
        {"Constraint", CategoryLabel::Constraint, "On behavior or task"},
        {"External interface requirement", CategoryLabel::Component, ""},
        {"Feature", CategoryLabel::Behavior, "From viewpoint of actor (e.g. user)"},
        {"Functional requirement", CategoryLabel::Behavior, ""},
        {"Nonfunctional requirement", CategoryLabel::Constraint, "On the system or products"},
        {"Quality attribute", CategoryLabel::Constraint,
         "On the system; from viewpoint of actor (e.g. user)"},
        {"System requirement", CategoryLabel::Component, ""},
        {"User requirement", CategoryLabel::Goal, ""},
    };
    return table;
}

const std::vector<CrosswalkEntry>& avl_table() {
    static const std::vector<CrosswalkEntry> table = {
        {"Functional requirements", CategoryLabel::Constraint, "Or behavior"},
        {"Non-functional requirements", CategoryLabel::Task, "Can also be product"},
        {"Quality requirements", CategoryLabel::Constraint, "Usually engineering decisions"},
        {"Compliance requirements", CategoryLabel::Constraint, "Usually business rule"},
        {"Architectural requirements", CategoryLabel::Component, ""},
        {"Development requirements", CategoryLabel::Task, "Can also be product"},
        {"Goals", CategoryLabel::Goal, ""},
        {"Expectations", CategoryLabel::Goal, ""},
        {"Domain properties", CategoryLabel::Constraint,
         "Or Component if the property holds on a structural description"},
    };
    return table;
}

const CrosswalkEntry* crosswalk_wb(std::string_view wb_label) {
    return find_entry(wb_table(), wb_label);
}

const CrosswalkEntry* crosswalk_avl(std::string_view avl_label) {
    return find_entry(avl_table(), avl_label);
}

} // namespace srslint
