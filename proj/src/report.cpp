#include "srslint/report.hpp"

#include "srslint/linker.hpp"

#include <json.hpp>

#include <sstream>

namespace srslint {

std::string_view exit_class_name(ExitClass c) {
    switch (c) {
    case ExitClass::Clean: return "clean";
    case ExitClass::WarningsOnly: return "warnings-only";
    case ExitClass::Errors: return "errors";
    case ExitClass::ParseFailed: return "parse-failed";
    }
    return "clean";
}

int exit_code(ExitClass c, bool strict) {
    switch (c) {
    case ExitClass::Clean: return 0;
    case ExitClass::WarningsOnly: return strict ? 1 : 0;
    case ExitClass::Errors: return 1;
    case ExitClass::ParseFailed: return 2;
    }
    return 2;
}

ExitClass classify(const std::vector<Diagnostic>& diags, bool parse_failed) {
    if (parse_failed) return ExitClass::ParseFailed;
    bool warn = false;
    for (const Diagnostic& d : diags) {
        if (d.severity == Severity::Error) return ExitClass::Errors;
        warn = warn || d.severity == Severity::Warning;
    }
    return warn ? ExitClass::WarningsOnly : ExitClass::Clean;
}

DocumentSummary summarize(const SrsDocument& doc) {
    DocumentSummary s;
    for_each_element(doc, [&](const RequirementElement& e) {
        ++s.elements;
        ++s.categories[std::string(category_keyword(e.classification.category))];
        if (e.classification.subcategory)
            ++s.subcategories[std::string(subcategory_keyword(*e.classification.subcategory))];
        if (e.classification.nature)
            ++s.subcategories[std::string(nature_keyword(*e.classification.nature))];
        if (e.classification.source)
            ++s.subcategories[std::string(source_keyword(*e.classification.source))];
        if (e.is_composite()) {
            ++s.composites;
            if (is_heterogeneous(e)) ++s.heterogeneous_composites;
        } else {
            ++s.elementary;
        }
    });
    for (const RelationEdge& e : doc.declared_edges)
        ++s.relations_declared[std::string(relation_name(e.kind))];
    for (const RelationEdge& e : all_edges(doc, true))
        if (e.provenance == Provenance::Derived)
            ++s.relations_derived[std::string(relation_name(e.kind))];
    return s;
}

Report check_file_content(const std::string& content, const std::string& filename,
                          const LintConfig& cfg) {
    Report r;
    r.file = filename;
    ParseResult parsed = parse(content, filename);
    if (!parsed.ok()) {
        for (const ParseError& pe : parsed.errors) {
            Diagnostic d;
            d.rule = "parse";
            d.severity = Severity::Error;
            d.message = std::string(parse_error_kind_name(pe.kind)) + ": " + pe.message;
            d.location = pe.location;
            r.diagnostics.push_back(std::move(d));
        }
        r.exit_class = ExitClass::ParseFailed;
        return r;
    }
    r.summary = summarize(*parsed.document);
    r.diagnostics = lint(*parsed.document, cfg);
    r.exit_class = classify(r.diagnostics, false);
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << r.file << ": " << exit_class_name(r.exit_class) << "\n";
    if (r.exit_class != ExitClass::ParseFailed) {
        const DocumentSummary& s = r.summary;
        out << "  elements: " << s.elements << " (" << s.composites << " composite, "
            << s.elementary << " elementary, " << s.heterogeneous_composites
            << " heterogeneous)\n";
        auto print_counts = [&](const char* name,
                                const std::map<std::string, std::size_t>& m) {
            if (m.empty()) return;
            out << "  " << name << ":";
            for (const auto& [k, n] : m) out << ' ' << k << '=' << n;
            out << "\n";
        };
        print_counts("categories", s.categories);
        print_counts("subcategories", s.subcategories);
        print_counts("relations", s.relations_declared);
        print_counts("derived", s.relations_derived);
    }
    for (const Diagnostic& d : r.diagnostics) {
        out << d.location.file << ':' << d.location.line << ": " << severity_name(d.severity)
            << ": [" << d.rule << "] " << d.message;
        if (!d.subjects.empty()) {
            out << " (";
            for (std::size_t i = 0; i < d.subjects.size(); ++i) {
                if (i) out << ", ";
                out << d.subjects[i];
            }
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["version"] = 1;
    j["file"] = r.file;
    j["exit_class"] = std::string(exit_class_name(r.exit_class));

    nlohmann::json summary;
    summary["elements"] = r.summary.elements;
    summary["composites"] = r.summary.composites;
    summary["elementary"] = r.summary.elementary;
    summary["heterogeneous_composites"] = r.summary.heterogeneous_composites;
    summary["categories"] = r.summary.categories;
    summary["subcategories"] = r.summary.subcategories;
    summary["relations"] = {{"declared", r.summary.relations_declared},
                            {"derived", r.summary.relations_derived}};
    j["summary"] = std::move(summary);

    nlohmann::json diags = nlohmann::json::array();
    for (const Diagnostic& d : r.diagnostics) {
        diags.push_back({{"rule", d.rule},
                         {"severity", std::string(severity_name(d.severity))},
                         {"subjects", d.subjects},
                         {"file", d.location.file},
                         {"line", d.location.line},
                         {"message", d.message}});
    }
    j["diagnostics"] = std::move(diags);
    return j.dump(2) + "\n";
}

} // namespace srslint
