#include "srslint/lint.hpp"

#include <cctype>
#include <regex>

namespace srslint {

namespace {

std::vector<std::string> words_of(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool has_verb_marker(const std::vector<std::string>& words) {
    static const std::set<std::string> markers = {
        "shall", "must", "will", "should", "may",  "can",  "is",  "are",
        "was",   "were", "be",   "has",    "have", "had",  "do",  "does",
        "did",   "allow", "allows", "provide", "provides", "support", "supports",
    };
    for (const std::string& w : words)
        if (markers.count(w)) return true;
    return false;
}

bool names_person_or_group(const std::vector<std::string>& words) {
    static const std::set<std::string> people = {
        "customer",  "customers", "user",       "users",      "agent",     "agents",
        "actor",     "actors",    "admin",      "administrator", "operator", "manager",
        "owner",     "owners",    "staff",      "team",       "teams",     "department",
        "employee",  "employees", "engineer",   "engineers",  "stakeholder", "stakeholders",
        "subsidiary", "ceo",      "company",    "group",      "clerk",     "tester",
        "developer", "developers",
    };
    for (const std::string& w : words)
        if (people.count(w)) return true;
    return false;
}

bool icontains(const std::string& haystack, std::string_view needle) {
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(),
                          [](char a, char b) {
                              return std::tolower(static_cast<unsigned char>(a)) ==
                                     std::tolower(static_cast<unsigned char>(b));
                          });
    return it != haystack.end();
}

} // namespace

std::vector<CategorySuggestion> suggest_category(const std::string& statement) {
    std::vector<CategorySuggestion> out;
    auto add = [&](CategoryLabel cat, std::string pattern) {
        for (const CategorySuggestion& s : out)
            if (s.pattern == pattern) return;
        out.push_back({cat, std::move(pattern)});
    };

    const std::vector<std::string> words = words_of(statement);

    // 1. numbered title with no verb reads as document structure
    static const std::regex heading_re(R"(^\s*(section\s+)?\d+(\.\d+)*\.?\s+\S)",
                                       std::regex::icase);
    if (std::regex_search(statement, heading_re)) {
        std::vector<std::string> rest = words;
        // drop a leading "section" token; digits never reach words_of
        if (!rest.empty() && rest.front() == "section") rest.erase(rest.begin());
        if (!rest.empty() && rest.size() <= 6 && !has_verb_marker(rest))
            add(CategoryLabel::MetaRequirement, "numbered-heading");
    }

    // 2. explicit scope exclusions
    for (std::string_view phrase : {"not part of", "outside of the scope", "outside the scope",
                                    "falls outside", "will be performed in a follow-up"}) {
        if (icontains(statement, phrase)) {
            add(CategoryLabel::Limit, "scope-exclusion");
            break;
        }
    }

    // 3. responsibility assignment
    for (std::string_view phrase :
         {"shall be responsible", "shall be designed for operation by"}) {
        if (icontains(statement, phrase)) {
            add(CategoryLabel::Role, "responsibility-phrase");
            break;
        }
    }

    // 4. "shall <action verb>" (a bare copula does not state an effect)
    {
        static const std::regex shall_re(R"(\b(shall|must)\s+([A-Za-z]+))", std::regex::icase);
        auto begin = std::sregex_iterator(statement.begin(), statement.end(), shall_re);
        for (auto it = begin; it != std::sregex_iterator(); ++it) {
            std::string verb = (*it)[2].str();
            for (char& c : verb) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (verb != "be" && verb != "not") {
                add(CategoryLabel::Behavior, "shall+verb");
                break;
            }
        }
    }

    // 5. bound/threshold/condition phrasing
    {
        static const std::regex not_exceed_re(R"(\b(shall|must)\s+not\s+exceed\b)",
                                              std::regex::icase);
        static const std::regex at_least_re(R"(\bat\s+least\s+\S*[\w%])", std::regex::icase);
        static const std::regex requires_re(R"(\brequires\s+\S)", std::regex::icase);
        if (std::regex_search(statement, not_exceed_re))
            add(CategoryLabel::Constraint, "bounded-limit");
        if (std::regex_search(statement, at_least_re))
            add(CategoryLabel::Constraint, "at-least-threshold");
        if (std::regex_search(statement, requires_re))
            add(CategoryLabel::Constraint, "requires-condition");
    }

    // 6. stated objectives and benefits
    {
        static const std::regex allow_org_re(R"(\ballow\s+[A-Z][A-Za-z]*\s+to\b)");
        if (icontains(statement, "the goal")) add(CategoryLabel::Goal, "goal-phrase");
        if (std::regex_search(statement, allow_org_re)) add(CategoryLabel::Goal, "allow-org-to");
        if (icontains(statement, "this will reduce"))
            add(CategoryLabel::Goal, "projected-benefit");
    }

    // 7. short noun phrase naming a person or group
    if (!words.empty() && words.size() <= 4 && !has_verb_marker(words) &&
        names_person_or_group(words))
        add(CategoryLabel::Component, "actor-noun-phrase");

    return out;
}

} // namespace srslint
