#pragma once

#include "srslint/document.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srslint {

enum class ParseErrorKind {
    Syntax,
    DuplicateId,
    UnknownCategory,
    UnknownSubcategory,
    UnknownRelation,
    DanglingEndpoint,
    SelfEdge,
    BadIndent,
};

std::string_view parse_error_kind_name(ParseErrorKind k);

struct ParseError {
    SourceLocation location; // always populated
    ParseErrorKind kind = ParseErrorKind::Syntax;
    std::string message;
};

/// Either a document satisfying all SrsDocument invariants, or every error
/// found in one pass (recovery continues to end of input).
struct ParseResult {
    std::optional<SrsDocument> document;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty() && document.has_value(); }
};

/// Parses the line-oriented .srs format:
///
///   @document "<title>"                         optional, first line
///   @notations <tag> <tag> ...                  extends the canonical set
///   @glossary ... @end                          term "<phrase>": "<definition>"
///   [<id>] <category>[(<sub>[, <sub>])] [<notation>] :: <statement>
///   @relations ... @end                         <id> <KIND> <id>
///
/// Nesting is two spaces per level; `#` starts a comment outside quotes; a
/// trailing `\` outside quotes continues the statement on the next line.
/// Statements may be raw text to end of line or double-quoted with `\"` and
/// `\\` escapes (the renderer always emits the quoted form).
ParseResult parse(std::string_view input, std::string filename = "<input>");

} // namespace srslint
