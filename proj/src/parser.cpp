#include "srslint/parser.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace srslint {

std::string_view parse_error_kind_name(ParseErrorKind k) {
    switch (k) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::DuplicateId: return "DuplicateId";
    case ParseErrorKind::UnknownCategory: return "UnknownCategory";
    case ParseErrorKind::UnknownSubcategory: return "UnknownSubcategory";
    case ParseErrorKind::UnknownRelation: return "UnknownRelation";
    case ParseErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ParseErrorKind::SelfEdge: return "SelfEdge";
    case ParseErrorKind::BadIndent: return "BadIndent";
    }
    return "Syntax";
}

namespace {

bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

bool is_tag_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
}

std::string_view ltrim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::string_view rtrim(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

/// Cuts `#`-comments. Quote state is tracked so statements and glossary
/// strings may contain '#'; inside quotes, backslash escapes the next
/// character. Returns the retained text and whether its final character sits
/// inside an (unterminated) quote.
std::pair<std::string_view, bool> strip_comment(std::string_view line) {
    bool in_quote = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quote) {
            if (c == '\\' && i + 1 < line.size())
                ++i;
            else if (c == '"')
                in_quote = false;
        } else if (c == '"') {
            in_quote = true;
        } else if (c == '#') {
            return {line.substr(0, i), false};
        }
    }
    return {line, in_quote};
}

/// A logical line after comment stripping and continuation joining.
struct LogicalLine {
    std::string text;
    int line = 0; // first physical line, 1-based
};

std::vector<LogicalLine> logical_lines(std::string_view input) {
    std::vector<LogicalLine> out;
    std::size_t pos = 0;
    int lineno = 0;
    bool continuing = false;
    while (pos <= input.size()) {
        std::size_t nl = input.find('\n', pos);
        std::string_view raw =
            input.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? input.size() + 1 : nl + 1;
        ++lineno;

        auto [stripped, in_quote] = strip_comment(raw);
        std::string_view body = rtrim(stripped);
        bool continues = !in_quote && !body.empty() && body.back() == '\\';
        if (continues) body = rtrim(body.substr(0, body.size() - 1));

        if (continuing && !out.empty()) {
            std::string_view part = ltrim(body);
            if (!part.empty()) {
                out.back().text += ' ';
                out.back().text += part;
            }
        } else {
            out.push_back({std::string(body), lineno});
        }
        continuing = continues;
        if (nl == std::string_view::npos) break;
    }
    return out;
}

struct FlatNode {
    RequirementElement element;
    int depth = 0;
    int parent = -1; // index into the flat list
};

class Parser {
public:
    Parser(std::string filename) : filename_(std::move(filename)) {}

    ParseResult run(std::string_view input);

private:
    enum class Block { None, Glossary, Relations };

    void error(int line, int column, ParseErrorKind kind, std::string message) {
        errors_.push_back({{filename_, line, column}, kind, std::move(message)});
    }

    void handle_directive(std::string_view body, int line);
    void handle_glossary_line(std::string_view body, int line);
    void handle_relation_line(std::string_view body, int line);
    void handle_element_line(std::string_view body, int line);

    /// Scans a double-quoted string with \" and \\ escapes starting at
    /// `i` (which must point at the opening quote). Returns the decoded
    /// content and leaves `i` one past the closing quote, or returns
    /// nullopt on an unterminated quote.
    std::optional<std::string> scan_quoted(std::string_view s, std::size_t& i) const;

    /// Statement text: either one quoted string or raw text to end of line.
    std::optional<std::string> scan_statement(std::string_view rest, int line, int column);

    std::string filename_;
    std::vector<ParseError> errors_;
    SrsDocument doc_;
    std::vector<FlatNode> nodes_;
    std::set<std::string> ids_;
    Block block_ = Block::None;
    bool saw_content_ = false; // anything except @document
    bool saw_document_ = false;
    int block_open_line_ = 0;
};

std::optional<std::string> Parser::scan_quoted(std::string_view s, std::size_t& i) const {
    std::string out;
    ++i; // opening quote
    while (i < s.size()) {
        char c = s[i];
        if (c == '\\' && i + 1 < s.size() && (s[i + 1] == '"' || s[i + 1] == '\\')) {
            out.push_back(s[i + 1]);
            i += 2;
            continue;
        }
        if (c == '"') {
            ++i;
            return out;
        }
        out.push_back(c);
        ++i;
    }
    return std::nullopt;
}

std::optional<std::string> Parser::scan_statement(std::string_view rest, int line, int column) {
    rest = ltrim(rest);
    if (!rest.empty() && rest.front() == '"') {
        std::size_t i = 0;
        auto text = scan_quoted(rest, i);
        if (!text) {
            error(line, column, ParseErrorKind::Syntax, "unterminated quoted statement");
            return std::nullopt;
        }
        if (!ltrim(rest.substr(i)).empty()) {
            error(line, column, ParseErrorKind::Syntax,
                  "unexpected text after quoted statement");
            return std::nullopt;
        }
        return text;
    }
    return std::string(rest);
}

void Parser::handle_directive(std::string_view body, int line) {
    std::istringstream iss{std::string(body)};
    std::string word;
    iss >> word;

    if (word == "@end") {
        if (block_ == Block::None)
            error(line, 1, ParseErrorKind::Syntax, "@end without an open block");
        block_ = Block::None;
        return;
    }
    if (block_ != Block::None) {
        error(line, 1, ParseErrorKind::Syntax,
              word + " inside a block opened at line " + std::to_string(block_open_line_));
        return;
    }

    if (word == "@document") {
        if (saw_content_ || saw_document_) {
            error(line, 1, ParseErrorKind::Syntax,
                  "@document must be the first non-comment line");
            return;
        }
        saw_document_ = true;
        std::string_view rest = ltrim(body.substr(body.find(word) + word.size()));
        if (rest.empty() || rest.front() != '"') {
            error(line, 1, ParseErrorKind::Syntax, "@document expects a quoted title");
            return;
        }
        std::size_t i = 0;
        auto title = scan_quoted(rest, i);
        if (!title || !ltrim(rest.substr(i)).empty()) {
            error(line, 1, ParseErrorKind::Syntax, "malformed @document title");
            return;
        }
        doc_.title = *title;
        return;
    }

    saw_content_ = true;
    if (word == "@notations") {
        std::string tag;
        bool any = false;
        while (iss >> tag) {
            any = true;
            bool ok = !tag.empty();
            for (char c : tag) ok = ok && is_tag_char(c);
            if (!ok) {
                error(line, 1, ParseErrorKind::Syntax,
                      "notation tag must be a lowercase token: '" + tag + "'");
                continue;
            }
            doc_.notation_decls.insert(NotationTag{tag});
        }
        if (!any) error(line, 1, ParseErrorKind::Syntax, "@notations expects at least one tag");
        return;
    }
    if (word == "@glossary") {
        block_ = Block::Glossary;
        block_open_line_ = line;
        return;
    }
    if (word == "@relations") {
        block_ = Block::Relations;
        block_open_line_ = line;
        return;
    }
    error(line, 1, ParseErrorKind::Syntax, "unknown directive " + word);
}

void Parser::handle_glossary_line(std::string_view body, int line) {
    std::string_view rest = ltrim(body);
    if (rest.substr(0, 4) != "term" || rest.size() < 5 || rest[4] != ' ') {
        error(line, 1, ParseErrorKind::Syntax, "glossary line must be: term \"<phrase>\": \"<definition>\"");
        return;
    }
    rest = ltrim(rest.substr(4));
    if (rest.empty() || rest.front() != '"') {
        error(line, 1, ParseErrorKind::Syntax, "glossary term must be quoted");
        return;
    }
    std::size_t i = 0;
    auto phrase = scan_quoted(rest, i);
    if (!phrase) {
        error(line, 1, ParseErrorKind::Syntax, "unterminated glossary term");
        return;
    }
    std::string_view after = ltrim(rest.substr(i));
    if (after.empty() || after.front() != ':') {
        error(line, 1, ParseErrorKind::Syntax, "expected ':' after glossary term");
        return;
    }
    after = ltrim(after.substr(1));
    if (after.empty() || after.front() != '"') {
        error(line, 1, ParseErrorKind::Syntax, "glossary definition must be quoted");
        return;
    }
    i = 0;
    auto definition = scan_quoted(after, i);
    if (!definition || !ltrim(after.substr(i)).empty()) {
        error(line, 1, ParseErrorKind::Syntax, "malformed glossary definition");
        return;
    }
    if (Glossary::fold(*phrase).empty()) {
        error(line, 1, ParseErrorKind::Syntax, "glossary term is empty");
        return;
    }
    if (!doc_.glossary.insert(*phrase, *definition))
        error(line, 1, ParseErrorKind::DuplicateId,
              "duplicate glossary term '" + Glossary::fold(*phrase) + "'");
}

void Parser::handle_relation_line(std::string_view body, int line) {
    std::istringstream iss{std::string(body)};
    std::string x, kind_name, y, extra;
    if (!(iss >> x >> kind_name >> y)) {
        error(line, 1, ParseErrorKind::Syntax, "relation line must be: <id> <KIND> <id>");
        return;
    }
    if (iss >> extra) {
        error(line, 1, ParseErrorKind::Syntax, "unexpected text after relation: '" + extra + "'");
        return;
    }
    auto kind = relation_from_name(kind_name);
    if (!kind) {
        error(line, 1, ParseErrorKind::UnknownRelation, "unknown relation kind '" + kind_name + "'");
        return;
    }
    if (x == y) {
        error(line, 1, ParseErrorKind::SelfEdge, "self-edge on '" + x + "' is not a relation");
        return;
    }
    RelationEdge e;
    e.x = x;
    e.y = y;
    e.kind = *kind;
    e.provenance = Provenance::Declared;
    e.location = {filename_, line, 1};
    doc_.declared_edges.push_back(std::move(e));
}

void Parser::handle_element_line(std::string_view body, int line) {
    // indentation
    int indent = 0;
    for (char c : body) {
        if (c == ' ') {
            ++indent;
        } else if (c == '\t') {
            error(line, indent + 1, ParseErrorKind::BadIndent,
                  "tabs are not allowed in indentation");
            return;
        } else {
            break;
        }
    }
    if (indent % 2 != 0) {
        error(line, 1, ParseErrorKind::BadIndent,
              "indentation must be a multiple of two spaces (got " + std::to_string(indent) + ")");
        return;
    }
    int depth = indent / 2;
    int max_depth = nodes_.empty() ? 0 : nodes_.back().depth + 1;
    if (depth > max_depth) {
        error(line, 1, ParseErrorKind::BadIndent,
              "element nested " + std::to_string(depth) + " levels deep but the previous "
              "element allows at most " + std::to_string(max_depth));
        return;
    }

    std::string_view rest = body.substr(static_cast<std::size_t>(indent));
    int col0 = indent + 1;
    if (rest.empty() || rest.front() != '[') {
        error(line, col0, ParseErrorKind::Syntax, "expected '[<id>]' at start of element line");
        return;
    }
    std::size_t close = rest.find(']');
    if (close == std::string_view::npos) {
        error(line, col0, ParseErrorKind::Syntax, "unterminated element id");
        return;
    }
    std::string id{rest.substr(1, close - 1)};
    bool id_ok = !id.empty();
    for (char c : id) id_ok = id_ok && is_id_char(c);
    if (!id_ok) {
        error(line, col0, ParseErrorKind::Syntax, "element id must be nonempty [A-Za-z0-9_.-]: '" + id + "'");
        return;
    }

    rest = ltrim(rest.substr(close + 1));

    // category keyword
    std::size_t klen = 0;
    while (klen < rest.size() && (is_tag_char(rest[klen]))) ++klen;
    std::string keyword{rest.substr(0, klen)};
    auto category = category_from_keyword(keyword);
    if (!category) {
        error(line, col0, ParseErrorKind::UnknownCategory, "unknown category '" + keyword + "'");
        return;
    }
    rest = rest.substr(klen);

    Classification cls;
    cls.category = *category;

    // optional (sub[, sub])
    if (!rest.empty() && rest.front() == '(') {
        std::size_t close_paren = rest.find(')');
        if (close_paren == std::string_view::npos) {
            error(line, col0, ParseErrorKind::Syntax, "unterminated subcategory list");
            return;
        }
        std::string_view inner = rest.substr(1, close_paren - 1);
        std::vector<std::string> subs;
        std::size_t start = 0;
        while (start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            std::string_view piece = comma == std::string_view::npos
                                         ? inner.substr(start)
                                         : inner.substr(start, comma - start);
            piece = rtrim(ltrim(piece));
            subs.emplace_back(piece);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (subs.size() > 2) {
            error(line, col0, ParseErrorKind::Syntax, "at most two subcategories are allowed");
            return;
        }
        for (const std::string& kw : subs) {
            if (auto sub = subcategory_from_keyword(kw)) {
                if (cls.subcategory) {
                    error(line, col0, ParseErrorKind::Syntax,
                          "two general subcategories; a constraint pair must be one nature "
                          "and one source");
                    return;
                }
                cls.subcategory = sub;
            } else if (auto nature = nature_from_keyword(kw)) {
                if (cls.nature) {
                    error(line, col0, ParseErrorKind::Syntax, "duplicate nature subcategory");
                    return;
                }
                cls.nature = nature;
            } else if (auto source = source_from_keyword(kw)) {
                if (cls.source) {
                    error(line, col0, ParseErrorKind::Syntax, "duplicate source subcategory");
                    return;
                }
                cls.source = source;
            } else {
                error(line, col0, ParseErrorKind::UnknownSubcategory,
                      "unknown subcategory '" + kw + "'");
                return;
            }
        }
        rest = rest.substr(close_paren + 1);
    }

    rest = ltrim(rest);

    // optional notation token before '::'
    NotationTag notation; // defaults to text
    if (!rest.empty() && rest.substr(0, 2) != "::") {
        std::size_t tlen = 0;
        while (tlen < rest.size() && is_tag_char(rest[tlen])) ++tlen;
        std::string tag{rest.substr(0, tlen)};
        if (tag.empty()) {
            error(line, col0, ParseErrorKind::Syntax, "expected '::' or a notation tag");
            return;
        }
        NotationTag nt{tag};
        if (!canonical_notations().count(nt) && !doc_.notation_decls.count(nt)) {
            error(line, col0, ParseErrorKind::Syntax,
                  "notation '" + tag + "' is neither canonical nor declared via @notations");
            return;
        }
        notation = nt;
        rest = ltrim(rest.substr(tlen));
    }

    if (rest.substr(0, 2) != "::") {
        error(line, col0, ParseErrorKind::Syntax, "expected '::' before the statement");
        return;
    }
    auto statement = scan_statement(rest.substr(2), line, col0);
    if (!statement) return;

    if (!ids_.insert(id).second)
        error(line, col0, ParseErrorKind::DuplicateId, "duplicate element id '" + id + "'");

    FlatNode node;
    node.element.id = std::move(id);
    node.element.text = std::move(*statement);
    node.element.notation = std::move(notation);
    node.element.classification = cls;
    node.element.location = {filename_, line, col0};
    node.depth = depth;
    if (depth > 0) {
        // nearest preceding shallower element
        for (int i = static_cast<int>(nodes_.size()) - 1; i >= 0; --i) {
            if (nodes_[static_cast<std::size_t>(i)].depth == depth - 1) {
                node.parent = i;
                break;
            }
        }
    }
    nodes_.push_back(std::move(node));
}

ParseResult Parser::run(std::string_view input) {
    for (const LogicalLine& ll : logical_lines(input)) {
        std::string_view body = ll.text;
        if (ltrim(body).empty()) continue;

        std::string_view head = ltrim(body);
        if (head.front() == '@') {
            handle_directive(head, ll.line);
            saw_content_ = saw_content_ || block_ != Block::None;
            continue;
        }
        saw_content_ = true;
        switch (block_) {
        case Block::Glossary: handle_glossary_line(body, ll.line); break;
        case Block::Relations: handle_relation_line(body, ll.line); break;
        case Block::None: handle_element_line(body, ll.line); break;
        }
    }
    if (block_ != Block::None)
        error(block_open_line_, 1, ParseErrorKind::Syntax,
              std::string(block_ == Block::Glossary ? "@glossary" : "@relations") +
                  " block is never closed with @end");

    // endpoint resolution over the whole file
    for (const RelationEdge& e : doc_.declared_edges) {
        for (const std::string* endpoint : {&e.x, &e.y}) {
            if (!ids_.count(*endpoint))
                error(e.location.line, 1, ParseErrorKind::DanglingEndpoint,
                      "relation endpoint '" + *endpoint + "' is not a defined element");
        }
    }

    // assemble the forest
    std::vector<std::vector<int>> kids(nodes_.size());
    std::vector<int> root_idx;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].parent >= 0)
            kids[static_cast<std::size_t>(nodes_[i].parent)].push_back(static_cast<int>(i));
        else
            root_idx.push_back(static_cast<int>(i));
    }
    std::function<RequirementElement(int)> build = [&](int i) {
        RequirementElement e = std::move(nodes_[static_cast<std::size_t>(i)].element);
        for (int k : kids[static_cast<std::size_t>(i)]) e.children.push_back(build(k));
        return e;
    };
    for (int r : root_idx) doc_.roots.push_back(build(r));

    ParseResult result;
    result.errors = std::move(errors_);
    if (result.errors.empty()) result.document = std::move(doc_);
    return result;
}

} // namespace

ParseResult parse(std::string_view input, std::string filename) {
    if (input.substr(0, 3) == "\xEF\xBB\xBF") input.remove_prefix(3);
    Parser p(std::move(filename));
    return p.run(input);
}

} // namespace srslint
