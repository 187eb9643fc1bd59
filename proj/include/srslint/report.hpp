#pragma once

#include "srslint/lint.hpp"
#include "srslint/parser.hpp"

#include <map>
#include <string>
#include <vector>

namespace srslint {

enum class ExitClass { Clean, WarningsOnly, Errors, ParseFailed };

std::string_view exit_class_name(ExitClass c);

/// Process exit code for one result class. 0 = Clean (and WarningsOnly
/// unless strict), 1 = Errors, 2 = ParseFailed.
int exit_code(ExitClass c, bool strict);

struct DocumentSummary {
    std::size_t elements = 0;
    std::size_t composites = 0;
    std::size_t elementary = 0;
    std::size_t heterogeneous_composites = 0;
    std::map<std::string, std::size_t> categories;         // keyword -> count
    std::map<std::string, std::size_t> subcategories;      // keyword -> count
    std::map<std::string, std::size_t> relations_declared; // kind name -> count
    std::map<std::string, std::size_t> relations_derived;
};

DocumentSummary summarize(const SrsDocument& doc);

struct Report {
    std::string file;
    DocumentSummary summary;
    std::vector<Diagnostic> diagnostics;
    ExitClass exit_class = ExitClass::Clean;
};

/// parse -> link -> lint for one input. On parse failure the report carries
/// the parse errors as error-severity diagnostics and class ParseFailed.
Report check_file_content(const std::string& content, const std::string& filename,
                          const LintConfig& cfg);

/// Worst severity wins: any Error -> Errors, else any Warning ->
/// WarningsOnly, else Clean. Info never gates.
ExitClass classify(const std::vector<Diagnostic>& diags, bool parse_failed);

std::string report_to_text(const Report& r);

/// Versioned machine-readable form; see docs/report.schema.json.
std::string report_to_json(const Report& r);

} // namespace srslint
