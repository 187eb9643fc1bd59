#include "srslint/lint.hpp"

#include "srslint/linker.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace srslint {

const std::vector<std::string>& rule_catalog() {
    static const std::vector<std::string> rules = {"R1", "R2", "R3", "R4", "R5",
                                                   "R6", "R7", "R8", "R9"};
    return rules;
}

LintConfig::LintConfig() {
    for (const std::string& r : rule_catalog()) enabled_rules.insert(r);
}

bool LintConfig::rule_enabled(const std::string& rule) const {
    return enabled_rules.count(rule) > 0;
}

namespace {

const std::set<std::string>& builtin_stopwords() {
    static const std::set<std::string> words = {
        "a",        "about",   "above",    "after",   "again",   "against", "all",
        "am",       "an",      "and",      "any",     "are",     "as",      "at",
        "be",       "because", "been",     "before",  "being",   "below",   "between",
        "both",     "but",     "by",       "can",     "cannot",  "could",   "did",
        "do",       "does",    "doing",    "down",    "during",  "each",    "either",
        "few",      "for",     "from",     "further", "had",     "has",     "have",
        "having",   "he",      "her",      "here",    "hers",    "herself", "him",
        "himself",  "his",     "how",      "i",       "if",      "in",      "into",
        "is",       "it",      "its",      "itself",  "just",    "may",     "me",
        "might",    "more",    "most",     "must",    "my",      "myself",  "neither",
        "no",       "nor",     "not",      "of",      "off",     "on",      "once",
        "only",     "onto",    "or",       "other",   "our",     "ours",    "out",
        "over",     "own",     "per",      "shall",   "she",     "should",  "so",
        "some",     "such",    "than",     "that",    "the",     "their",   "theirs",
        "them",     "then",    "there",    "these",   "they",    "this",    "those",
        "through",  "to",      "too",      "under",   "until",   "up",      "upon",
        "via",      "was",     "we",       "were",    "what",    "when",    "where",
        "which",    "while",   "who",      "whom",    "why",     "will",    "with",
        "within",   "without", "would",    "you",     "your",    "yours",
    };
    return words;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool pure_number(const std::string& tok) {
    return std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct TermScanner {
    const LintConfig& cfg;

    bool candidate(const std::string& tok) const {
        if (tok.size() < 2 || pure_number(tok)) return false;
        return builtin_stopwords().count(tok) == 0 && cfg.lack_stopwords.count(tok) == 0;
    }

    /// Emits every counted term occurrence in one statement. A bigram is any
    /// adjacency of two candidate tokens; a token inside some bigram is not
    /// also emitted as a unigram.
    template <typename Fn>
    void scan(std::string_view text, Fn&& emit) const {
        std::vector<std::string> toks = tokenize(text);
        std::vector<bool> in_bigram(toks.size(), false);
        for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
            if (candidate(toks[i]) && candidate(toks[i + 1])) {
                emit(toks[i] + " " + toks[i + 1]);
                in_bigram[i] = in_bigram[i + 1] = true;
            }
        }
        for (std::size_t i = 0; i < toks.size(); ++i)
            if (candidate(toks[i]) && !in_bigram[i]) emit(toks[i]);
    }
};

Diagnostic make_diag(std::string rule, Severity sev, std::vector<std::string> subjects,
                     std::string message, SourceLocation loc) {
    Diagnostic d;
    d.rule = std::move(rule);
    d.severity = sev;
    d.subjects = std::move(subjects);
    d.message = std::move(message);
    d.location = std::move(loc);
    return d;
}

std::string category_set_names(const RequirementElement& e) {
    std::set<std::string> names;
    for (const RequirementElement& c : e.children) {
        CategoryLabel cat = c.classification.category;
        if (cat == CategoryLabel::Lack || cat == CategoryLabel::MetaRequirement) continue;
        names.insert(std::string(category_keyword(cat)));
    }
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

} // namespace

std::map<std::string, int> extract_terms(const SrsDocument& doc, const LintConfig& cfg) {
    std::map<std::string, int> counts;
    TermScanner scanner{cfg};
    for_each_element(doc, [&](const RequirementElement& e) {
        scanner.scan(e.text, [&](const std::string& term) { ++counts[term]; });
    });
    return counts;
}

std::optional<std::string> load_config(const std::string& path, LintConfig& out) {
    std::ifstream in(path);
    if (!in) return "cannot open config file: " + path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        if (trimmed.empty()) continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            return "line " + std::to_string(lineno) + ": expected key=value";
        std::string key = trimmed.substr(0, eq);
        std::string value = trimmed.substr(eq + 1);

        if (key == "lack_min_occurrences") {
            int n = 0;
            try {
                n = std::stoi(value);
            } catch (...) {
                n = 0;
            }
            if (n < 2)
                return "line " + std::to_string(lineno) +
                       ": lack_min_occurrences must be an integer >= 2";
            out.lack_min_occurrences = n;
        } else if (key == "lack_stopwords") {
            std::stringstream ss(value);
            std::string word;
            while (std::getline(ss, word, ','))
                if (!word.empty()) out.lack_stopwords.insert(word);
        } else if (key.rfind("severity.", 0) == 0) {
            std::string rule = key.substr(9);
            if (std::find(rule_catalog().begin(), rule_catalog().end(), rule) ==
                rule_catalog().end())
                return "line " + std::to_string(lineno) + ": unknown rule '" + rule + "'";
            if (value == "error")
                out.severity_overrides[rule] = Severity::Error;
            else if (value == "warning")
                out.severity_overrides[rule] = Severity::Warning;
            else if (value == "info")
                out.severity_overrides[rule] = Severity::Info;
            else
                return "line " + std::to_string(lineno) +
                       ": severity must be error|warning|info";
        } else if (key.rfind("enable.", 0) == 0) {
            std::string rule = key.substr(7);
            if (std::find(rule_catalog().begin(), rule_catalog().end(), rule) ==
                rule_catalog().end())
                return "line " + std::to_string(lineno) + ": unknown rule '" + rule + "'";
            if (value == "true")
                out.enabled_rules.insert(rule);
            else if (value == "false")
                out.enabled_rules.erase(rule);
            else
                return "line " + std::to_string(lineno) + ": enable takes true|false";
        } else {
            return "line " + std::to_string(lineno) + ": unknown key '" + key + "'";
        }
    }
    return std::nullopt;
}

std::vector<Diagnostic> lint(const SrsDocument& doc, const LintConfig& cfg) {
    std::vector<Diagnostic> out;

    // R1: classification invariants
    if (cfg.rule_enabled("R1")) {
        for_each_element(doc, [&](const RequirementElement& e) {
            auto diags = validate_classification(e.classification, e.id, e.location);
            out.insert(out.end(), diags.begin(), diags.end());
        });
    }

    // R2: edge endpoint typing and nesting agreement
    if (cfg.rule_enabled("R2")) {
        auto diags = link(doc);
        out.insert(out.end(), diags.begin(), diags.end());
    }

    // R3: heterogeneous composites
    if (cfg.rule_enabled("R3")) {
        for_each_element(doc, [&](const RequirementElement& e) {
            if (e.is_composite() && is_heterogeneous(e))
                out.push_back(make_diag("R3", Severity::Warning, {e.id},
                                        "heterogeneous composite: direct children mix {" +
                                            category_set_names(e) + "}",
                                        e.location));
        });
    }

    // R4: true redundancy (same property, same notation)
    if (cfg.rule_enabled("R4")) {
        for (const RelationEdge& e : refine_repeats(doc)) {
            if (e.kind != RelationKind::Duplicates) continue;
            out.push_back(make_diag("R4", Severity::Error, {e.x, e.y},
                                    "'" + e.x + "' and '" + e.y +
                                        "' duplicate the same property in the same notation",
                                    e.location));
        }
    }

    // R5: declared contradictions, reported descriptively
    if (cfg.rule_enabled("R5")) {
        std::vector<RelationEdge> contradicts;
        for (const RelationEdge& e : doc.declared_edges)
            if (e.kind == RelationKind::Contradicts) contradicts.push_back(e);
        for (const RelationEdge& e : normalize_symmetry(std::move(contradicts)))
            out.push_back(make_diag("R5", Severity::Info, {e.x, e.y},
                                    "declared contradiction between '" + e.x + "' and '" + e.y +
                                        "'",
                                    e.location));
    }

    // R6: repeatedly used term missing from the glossary
    if (cfg.rule_enabled("R6")) {
        TermScanner scanner{cfg};
        std::map<std::string, int> counts;
        std::map<std::string, std::pair<SourceLocation, std::string>> first_seen;
        for_each_element(doc, [&](const RequirementElement& e) {
            scanner.scan(e.text, [&](const std::string& term) {
                ++counts[term];
                first_seen.emplace(term, std::make_pair(e.location, e.id));
            });
        });
        for (const auto& [term, count] : counts) {
            if (count < cfg.lack_min_occurrences || doc.glossary.contains(term)) continue;
            const auto& [loc, id] = first_seen[term];
            out.push_back(make_diag("R6", Severity::Warning, {id},
                                    "term '" + term + "' occurs " + std::to_string(count) +
                                        " times but has no glossary entry (possible lack)",
                                    loc));
        }
    }

    // R7: structural relation checks
    if (cfg.rule_enabled("R7")) {
        auto diags = check_structure(doc);
        out.insert(out.end(), diags.begin(), diags.end());
    }

    // R8: components should be defined in the glossary
    if (cfg.rule_enabled("R8")) {
        TermScanner scanner{cfg};
        for_each_element(doc, [&](const RequirementElement& e) {
            if (e.classification.category != CategoryLabel::Component) return;
            // Head term: longest candidate (bigrams before unigrams, then
            // character length, then first occurrence).
            std::string head;
            std::size_t head_tokens = 0;
            scanner.scan(e.text, [&](const std::string& term) {
                std::size_t ntok = 1 + static_cast<std::size_t>(std::count(term.begin(),
                                                                           term.end(), ' '));
                if (ntok > head_tokens || (ntok == head_tokens && term.size() > head.size())) {
                    head = term;
                    head_tokens = ntok;
                }
            });
            if (head.empty() || doc.glossary.contains(head)) return;
            out.push_back(make_diag("R8", Severity::Warning, {e.id},
                                    "component head term '" + head +
                                        "' is not a glossary entry",
                                    e.location));
        });
    }

    // R9: constraint with no nature/source classification
    if (cfg.rule_enabled("R9")) {
        for_each_element(doc, [&](const RequirementElement& e) {
            const Classification& c = e.classification;
            if (c.category == CategoryLabel::Constraint && !c.nature && !c.source)
                out.push_back(make_diag("R9", Severity::Info, {e.id},
                                        "constraint carries neither a nature nor a source "
                                        "classification",
                                        e.location));
        });
    }

    for (Diagnostic& d : out) {
        auto it = cfg.severity_overrides.find(d.rule);
        if (it != cfg.severity_overrides.end()) d.severity = it->second;
    }
    sort_diagnostics(out);
    return out;
}

} // namespace srslint
