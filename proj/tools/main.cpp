#include "srslint/crosswalk.hpp"
#include "srslint/graph_export.hpp"
#include "srslint/lint.hpp"
#include "srslint/renderer.hpp"
#include "srslint/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace srslint;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Shared by graph/stats: parse or report errors on stderr and exit 2.
std::optional<SrsDocument> parse_or_complain(const std::string& path) {
    auto content = read_file(path);
    if (!content) {
        std::cerr << "srslint: cannot read " << path << "\n";
        return std::nullopt;
    }
    ParseResult parsed = parse(*content, path);
    if (!parsed.ok()) {
        for (const ParseError& e : parsed.errors)
            std::cerr << e.location.file << ':' << e.location.line << ':' << e.location.column
                      << ": " << parse_error_kind_name(e.kind) << ": " << e.message << "\n";
        return std::nullopt;
    }
    return std::move(parsed.document);
}

int run_check(const std::vector<std::string>& paths, bool json, bool strict,
              const std::string& config_path) {
    LintConfig cfg;
    if (!config_path.empty()) {
        if (auto err = load_config(config_path, cfg)) {
            std::cerr << "srslint: bad config: " << *err << "\n";
            return 2;
        }
    }

    std::vector<std::string> sorted = paths;
    std::sort(sorted.begin(), sorted.end());

    int worst = 0;
    bool first = true;
    if (json && sorted.size() > 1) std::cout << "[\n";
    for (const std::string& path : sorted) {
        auto content = read_file(path);
        if (!content) {
            std::cerr << "srslint: cannot read " << path << "\n";
            worst = std::max(worst, 2);
            continue;
        }
        Report r = check_file_content(*content, path, cfg);
        if (json) {
            if (!first) std::cout << ",\n";
            std::cout << report_to_json(r);
        } else {
            std::cout << report_to_text(r);
        }
        first = false;
        worst = std::max(worst, exit_code(r.exit_class, strict));
    }
    if (json && sorted.size() > 1) std::cout << "]\n";
    return worst;
}

int run_graph(const std::string& path, const std::string& format, bool declared_only) {
    auto doc = parse_or_complain(path);
    if (!doc) return 2;
    if (format == "dot")
        std::cout << graph_to_dot(*doc, !declared_only);
    else
        std::cout << graph_to_json(*doc, !declared_only);
    return 0;
}

int run_stats(const std::string& path) {
    auto doc = parse_or_complain(path);
    if (!doc) return 2;
    DocumentSummary s = summarize(*doc);
    std::cout << "elements              " << s.elements << "\n";
    std::cout << "composite             " << s.composites << "\n";
    std::cout << "elementary            " << s.elementary << "\n";
    std::cout << "heterogeneous         " << s.heterogeneous_composites << "\n";
    std::cout << "categories:\n";
    for (const auto& [k, n] : s.categories)
        std::cout << "  " << k << std::string(k.size() < 20 ? 20 - k.size() : 1, ' ') << n
                  << "\n";
    if (!s.subcategories.empty()) {
        std::cout << "subcategories:\n";
        for (const auto& [k, n] : s.subcategories)
            std::cout << "  " << k << std::string(k.size() < 20 ? 20 - k.size() : 1, ' ') << n
                      << "\n";
    }
    if (!s.relations_declared.empty()) {
        std::cout << "relations (declared):\n";
        for (const auto& [k, n] : s.relations_declared)
            std::cout << "  " << k << std::string(k.size() < 20 ? 20 - k.size() : 1, ' ') << n
                      << "\n";
    }
    if (!s.relations_derived.empty()) {
        std::cout << "relations (derived):\n";
        for (const auto& [k, n] : s.relations_derived)
            std::cout << "  " << k << std::string(k.size() < 20 ? 20 - k.size() : 1, ' ') << n
                      << "\n";
    }
    return 0;
}

int run_suggest(const std::vector<std::string>& statement_words) {
    std::string statement;
    for (const std::string& w : statement_words) {
        if (!statement.empty()) statement += ' ';
        statement += w;
    }
    if (statement.empty()) {
        std::cerr << "srslint: suggest needs a statement\n";
        return 2;
    }
    auto suggestions = suggest_category(statement);
    if (suggestions.empty()) {
        std::cout << "no suggestion\n";
        return 0;
    }
    for (const CategorySuggestion& s : suggestions)
        std::cout << category_display(s.category) << "  [" << s.pattern << "]\n";
    return 0;
}

int run_crosswalk(const std::string& scheme, const std::vector<std::string>& label_words) {
    std::string label;
    for (const std::string& w : label_words) {
        if (!label.empty()) label += ' ';
        label += w;
    }
    const bool wb = scheme == "wb";
    const CrosswalkEntry* entry = wb ? crosswalk_wb(label) : crosswalk_avl(label);
    if (entry == nullptr) {
        std::cerr << "srslint: unknown " << (wb ? "Wiegers-Beatty" : "van Lamsweerde")
                  << " label '" << label << "'. Valid labels:\n";
        for (const CrosswalkEntry& e : (wb ? wb_table() : avl_table()))
            std::cerr << "  " << e.label << "\n";
        return 1;
    }
    std::cout << category_display(entry->category);
    if (!entry->note.empty()) std::cout << " — " << entry->note;
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"srslint — classify, relate and lint requirements documents (.srs)"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "parse, link and lint a document");
    std::vector<std::string> check_paths;
    bool json = false, strict = false;
    std::string config_path;
    check->add_option("paths", check_paths, "input .srs files")->required();
    check->add_flag("--json", json, "machine-readable report");
    check->add_flag("--strict", strict, "warnings fail the run (exit 1)");
    check->add_option("--config", config_path, "key=value lint configuration file");

    // graph
    auto* graph = app.add_subcommand("graph", "export the relation graph");
    std::string graph_path, format = "dot";
    bool declared_only = false;
    graph->add_option("path", graph_path, "input .srs file")->required();
    graph->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_flag("--declared-only", declared_only, "suppress derived edges");

    // stats
    auto* stats = app.add_subcommand("stats", "category and relation counts");
    std::string stats_path;
    stats->add_option("path", stats_path, "input .srs file")->required();

    // suggest
    auto* suggest = app.add_subcommand("suggest", "suggest a category for one statement");
    std::vector<std::string> statement_words;
    suggest->add_option("statement", statement_words, "the statement text")->required();

    // crosswalk
    auto* crosswalk = app.add_subcommand("crosswalk", "map an external vocabulary label");
    std::string scheme;
    std::vector<std::string> label_words;
    crosswalk->add_option("scheme", scheme, "wb (Wiegers-Beatty) or avl (van Lamsweerde)")
        ->required()
        ->check(CLI::IsMember({"wb", "avl"}));
    crosswalk->add_option("label", label_words, "the external label")->required();

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run_check(check_paths, json, strict, config_path);
    if (graph->parsed()) return run_graph(graph_path, format, declared_only);
    if (stats->parsed()) return run_stats(stats_path);
    if (suggest->parsed()) return run_suggest(statement_words);
    if (crosswalk->parsed()) return run_crosswalk(scheme, label_words);
    return 2;
}
