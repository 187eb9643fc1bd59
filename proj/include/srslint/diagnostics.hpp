#pragma once

#include <string>
#include <vector>

namespace srslint {

struct SourceLocation {
    std::string file;
    int line = 0;   // 1-based; 0 = unknown
    int column = 0; // 1-based; 0 = unknown

    bool known() const { return line > 0; }
};

enum class Severity { Error, Warning, Info };

std::string_view severity_name(Severity s);

/// A single finding. Rule ids are the stable catalog ids ("R1".."R9");
/// subjects are the element ids the finding is about (edge findings carry
/// both endpoints).
struct Diagnostic {
    std::string rule;
    Severity severity = Severity::Error;
    std::vector<std::string> subjects;
    std::string message;
    SourceLocation location;
};

/// Stable output order: location first, then rule id, then message.
void sort_diagnostics(std::vector<Diagnostic>& diags);

} // namespace srslint
