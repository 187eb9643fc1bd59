#pragma once

#include "srslint/document.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace srslint {

/// The registered rule catalog. Ids are stable API.
///
///   R1 invalid-classification      Error    classification invariants
///   R2 relation-endpoint           Error    edge endpoint typing / nesting
///   R3 heterogeneous-composite     Warning  composite mixes categories
///   R4 duplicate                   Error    derived DUPLICATES edge
///   R5 contradiction               Info     declared CONTRADICTS pairs
///   R6 lack-glossary               Warning  repeated unglossed term
///   R7 structure                   mixed    multi-primary / cycles / DISJOINS conflict
///   R8 component-not-in-glossary   Warning  component head term unglossed
///   R9 unrefined-constraint        Info     constraint without nature/source
const std::vector<std::string>& rule_catalog();

struct LintConfig {
    std::map<std::string, Severity> severity_overrides; // rule id -> severity
    int lack_min_occurrences = 3;                       // >= 2
    std::set<std::string> lack_stopwords;               // extends the built-in list
    std::set<std::string> enabled_rules;                // defaults to the full catalog

    LintConfig();
    bool rule_enabled(const std::string& rule) const;
};

/// Parses a plain-text key=value config file. Keys:
///   lack_min_occurrences=<n>        (n >= 2)
///   lack_stopwords=<w1,w2,...>      (added to the built-in list)
///   severity.<rule>=error|warning|info
///   enable.<rule>=true|false
/// Returns the message of the first malformed line on failure.
std::optional<std::string> load_config(const std::string& path, LintConfig& out);

/// Runs every enabled rule over a parsed-and-linked document; output ordered
/// by location. Deterministic for identical (doc, cfg).
std::vector<Diagnostic> lint(const SrsDocument& doc, const LintConfig& cfg);

/// Case-folded unigram and bigram occurrence counts over all statement
/// texts. Stopwords, pure numbers and single characters are excluded; a
/// token that participates in a bigram is not also counted as a unigram.
std::map<std::string, int> extract_terms(const SrsDocument& doc, const LintConfig& cfg);

/// One suggestion from the deterministic pattern cascade.
struct CategorySuggestion {
    CategoryLabel category;
    std::string pattern; // which rule matched, e.g. "shall+verb"
};

/// Structural (not semantic) category suggestions for one statement, every
/// matching pattern in cascade order, strongest first. Advisory only; empty
/// when nothing matches.
std::vector<CategorySuggestion> suggest_category(const std::string& statement);

} // namespace srslint
