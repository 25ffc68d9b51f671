#include "sqry/frontend.hpp"

#include "sqry/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <set>

namespace sqry {

namespace {

enum class Tok { Keyword, String, Integer, Colon, Greater };

enum class Kw { Input, Inputs, If, Else, Ifc, Print, Exit };

struct Token {
    Tok kind;
    Kw keyword{};
    std::string text;
    std::int64_t number = 0;
};

struct Line {
    int number;
    int indent;
    std::vector<Token> tokens;
};

std::optional<Kw> keyword_of(std::string_view word) {
    if (word == "input") return Kw::Input;
    if (word == "inputs") return Kw::Inputs;
    if (word == "if") return Kw::If;
    if (word == "else") return Kw::Else;
    if (word == "ifc") return Kw::Ifc;
    if (word == "print") return Kw::Print;
    if (word == "exit") return Kw::Exit;
    return std::nullopt;
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex_line(std::string_view text, int number) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '"') {
            std::string value;
            ++i;
            bool closed = false;
            while (i < text.size()) {
                char d = text[i++];
                if (d == '"') {
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (i >= text.size())
                        break;
                    char e = text[i++];
                    switch (e) {
                    case '"': d = '"'; break;
                    case '\\': d = '\\'; break;
                    case 'n': d = '\n'; break;
                    case 'r': d = '\r'; break;
                    case 't': d = '\t'; break;
                    case 'x': {
                        unsigned value = 0;
                        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + std::min(i + 2, text.size()),
                                                         value, 16);
                        if (ec != std::errc{} || ptr != text.data() + i + 2)
                            throw ParseError(number, "\\x escape needs two hex digits");
                        i += 2;
                        d = static_cast<char>(value);
                        break;
                    }
                    default:
                        throw ParseError(number, std::string("unknown escape sequence \\") + e);
                    }
                }
                if (d == '\0' || d == '\x03')
                    throw ParseError(number, "string literal contains a NUL or ETX character");
                value.push_back(d);
            }
            if (!closed)
                throw ParseError(number, "unterminated string literal (literals cannot span lines)");
            out.push_back({Tok::String, {}, std::move(value), 0});
        } else if (is_alpha(c)) {
            std::size_t start = i;
            while (i < text.size() && is_alpha(text[i]))
                ++i;
            std::string_view word = text.substr(start, i - start);
            auto kw = keyword_of(word);
            if (!kw)
                throw ParseError(number, "unknown keyword '" + std::string(word) + "'");
            out.push_back({Tok::Keyword, *kw, std::string(word), 0});
        } else if (is_digit(c) || (c == '-' && i + 1 < text.size() && is_digit(text[i + 1]))) {
            std::size_t start = i;
            ++i;
            while (i < text.size() && is_digit(text[i]))
                ++i;
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
            if (ec != std::errc{})
                throw ParseError(number, "integer literal out of range");
            out.push_back({Tok::Integer, {}, std::string(text.substr(start, i - start)), value});
        } else if (c == ':') {
            out.push_back({Tok::Colon, {}, ":", 0});
            ++i;
        } else if (c == '>') {
            out.push_back({Tok::Greater, {}, ">", 0});
            ++i;
        } else {
            throw ParseError(number, "unexpected character '" + std::string(1, c) + "'");
        }
    }
    return out;
}

std::vector<Line> split_lines(std::string_view source) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        std::size_t end = source.find('\n', pos);
        if (end == std::string_view::npos)
            end = source.size();
        std::string_view text = source.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!text.empty() && text.back() == '\r')
            text.remove_suffix(1);
        if (text.find_first_not_of(" \t") == std::string_view::npos)
            continue;
        int indent = 0;
        while (static_cast<std::size_t>(indent) < text.size() && text[indent] == ' ')
            ++indent;
        if (text[indent] == '\t')
            throw ParseError(number, "inconsistent indentation (tab character)");
        lines.push_back({number, indent, lex_line(text.substr(indent), number)});
    }
    return lines;
}

class Parser {
public:
    explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

    Node parse_program() {
        if (lines_.empty())
            throw ParseError(1, "empty program");
        int root_indent = lines_.front().indent;
        Node root = parse_sequence(root_indent);
        if (!at_end()) {
            const Line& l = current();
            if (l.indent == root_indent)
                throw ParseError(l.number, "unreachable statement");
            throw ParseError(l.number, "inconsistent indentation");
        }
        return root;
    }

private:
    bool at_end() const { return pos_ >= lines_.size(); }
    const Line& current() const { return lines_[pos_]; }

    static bool starts_with(const Line& l, Kw kw) {
        return !l.tokens.empty() && l.tokens[0].kind == Tok::Keyword && l.tokens[0].keyword == kw;
    }

    static const Token& expect(const Line& l, std::size_t i, Tok kind, const char* what) {
        if (i >= l.tokens.size() || l.tokens[i].kind != kind)
            throw ParseError(l.number, std::string("expected ") + what);
        return l.tokens[i];
    }

    static bool keyword_at(const Line& l, std::size_t i, Kw kw) {
        return i < l.tokens.size() && l.tokens[i].kind == Tok::Keyword && l.tokens[i].keyword == kw;
    }

    static void expect_end(const Line& l, std::size_t i) {
        if (i != l.tokens.size())
            throw ParseError(l.number, "unexpected '" + l.tokens[i].text + "'");
    }

    Node parse_sequence(int indent) {
        const Line& l = current();
        if (l.indent != indent)
            throw ParseError(l.number, "inconsistent indentation");
        if (l.tokens[0].kind != Tok::Keyword)
            throw ParseError(l.number, "expected a statement keyword");

        switch (l.tokens[0].keyword) {
        case Kw::Exit:
            expect_end(l, 1);
            ++pos_;
            return make_exit();
        case Kw::Print: {
            std::string text = expect(l, 1, Tok::String, "string after 'print'").text;
            bool exits = keyword_at(l, 2, Kw::Exit);
            expect_end(l, exits ? 3 : 2);
            ++pos_;
            if (exits)
                return make_print(std::move(text));
            if (at_end() || current().indent < indent)
                throw ParseError(l.number, "missing 'exit' after print");
            return make_print(std::move(text), parse_sequence(indent));
        }
        case Kw::Input:
            return parse_choice(indent);
        case Kw::Inputs:
            return parse_numeric(indent);
        case Kw::If:
        case Kw::Ifc:
            throw ParseError(l.number, "'" + l.tokens[0].text + "' without preceding input");
        case Kw::Else:
            throw ParseError(l.number, "'else' without preceding 'if'");
        }
        throw ParseError(l.number, "unknown statement");
    }

    // Header line consumed; parses the indented block below it.
    Node parse_body(const Line& header, int header_indent) {
        if (at_end() || current().indent <= header_indent)
            throw ParseError(header.number, "expected an indented block");
        int child_indent = current().indent;
        Node child = parse_sequence(child_indent);
        if (!at_end() && current().indent > header_indent) {
            if (current().indent == child_indent)
                throw ParseError(current().number, "unreachable statement");
            throw ParseError(current().number, "inconsistent indentation");
        }
        return child;
    }

    bool next_is_else(int indent) const {
        return !at_end() && current().indent == indent && starts_with(current(), Kw::Else);
    }

    Node parse_choice(int indent) {
        const Line& head = current();
        Ask ask;
        ask.prompt = expect(head, 1, Tok::String, "string after 'input'").text;
        expect_end(head, 2);
        ++pos_;

        if (at_end() || current().indent != indent || !starts_with(current(), Kw::If))
            throw ParseError(at_end() ? head.number : current().number, "expected 'if' after input");

        std::set<std::string> seen;
        bool first = true;
        while (first || next_is_else(indent)) {
            const Line& l = current();
            std::size_t i = 0;
            if (!first) {
                i = 1;
                if (i < l.tokens.size() && l.tokens[i].kind == Tok::Colon)
                    throw ParseError(l.number, "'else:' is only allowed after inputs");
                if (keyword_at(l, i, Kw::Ifc))
                    throw ParseError(l.number, "'else ifc' after a string question");
                if (!keyword_at(l, i, Kw::If))
                    throw ParseError(l.number, "expected 'if' after 'else'");
            }
            std::string match = expect(l, i + 1, Tok::String, "answer string").text;
            expect(l, i + 2, Tok::Colon, "':'");
            expect_end(l, i + 3);
            if (!seen.insert(match).second)
                throw ParseError(l.number, "duplicate answer \"" + match + "\"");
            ++pos_;
            Node child = parse_body(l, indent);
            ask.branches.push_back(Branch{std::move(match), Box<Node>(std::move(child))});
            first = false;
        }
        return Node{std::move(ask)};
    }

    Node parse_numeric(int indent) {
        const Line& head = current();
        AskNumeric ask;
        ask.prompt = expect(head, 1, Tok::String, "string after 'inputs'").text;
        expect_end(head, 2);
        ++pos_;

        if (at_end() || current().indent != indent || !starts_with(current(), Kw::Ifc))
            throw ParseError(at_end() ? head.number : current().number, "expected 'ifc' after inputs");

        bool first = true;
        while (first || next_is_else(indent)) {
            const Line& l = current();
            std::size_t i = 0;
            if (!first) {
                i = 1;
                if (i < l.tokens.size() && l.tokens[i].kind == Tok::Colon) {
                    expect_end(l, 2);
                    ++pos_;
                    ask.otherwise = Box<Node>(parse_body(l, indent));
                    break;
                }
                if (keyword_at(l, i, Kw::If))
                    throw ParseError(l.number, "'else if' after a numeric question");
                if (!keyword_at(l, i, Kw::Ifc))
                    throw ParseError(l.number, "expected 'ifc' after 'else'");
            }
            expect(l, i + 1, Tok::Greater, "'>' after 'ifc'");
            std::int64_t limit = expect(l, i + 2, Tok::Integer, "integer threshold").number;
            expect(l, i + 3, Tok::Colon, "':'");
            expect_end(l, i + 4);
            if (!ask.thresholds.empty() && limit >= ask.thresholds.back().limit)
                throw ParseError(l.number, "ifc thresholds must be strictly decreasing");
            ++pos_;
            Node child = parse_body(l, indent);
            ask.thresholds.push_back(Threshold{limit, Box<Node>(std::move(child))});
            first = false;
        }
        return Node{std::move(ask)};
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

std::string quote(std::string_view text) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = "\"";
    for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (u < 0x20 || u == 0x7f) {
                out += "\\x";
                out.push_back(kHex[u >> 4]);
                out.push_back(kHex[u & 0xf]);
            } else {
                out.push_back(c);
            }
        }
    }
    out.push_back('"');
    return out;
}

void emit(const Node& node, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::visit(Overloaded{
                   [&](const Exit&) { out += pad + "exit\n"; },
                   [&](const Print& p) {
                       if (std::holds_alternative<Exit>(p.next->value)) {
                           out += pad + "print " + quote(p.text) + " exit\n";
                       } else {
                           out += pad + "print " + quote(p.text) + "\n";
                           emit(*p.next, indent, out);
                       }
                   },
                   [&](const Ask& a) {
                       out += pad + "input " + quote(a.prompt) + "\n";
                       bool first = true;
                       for (const auto& b : a.branches) {
                           out += pad + (first ? "if " : "else if ") + quote(b.match) + ":\n";
                           emit(*b.child, indent + 3, out);
                           first = false;
                       }
                   },
                   [&](const AskNumeric& a) {
                       out += pad + "inputs " + quote(a.prompt) + "\n";
                       bool first = true;
                       for (const auto& t : a.thresholds) {
                           out += pad + (first ? "ifc > " : "else ifc > ") + std::to_string(t.limit) + ":\n";
                           emit(*t.child, indent + 3, out);
                           first = false;
                       }
                       if (a.otherwise) {
                           out += pad + "else:\n";
                           emit(**a.otherwise, indent + 3, out);
                       }
                   },
               },
               node.value);
}

} // namespace

Program parse(std::string_view source) {
    Parser parser(split_lines(source));
    return Program(parser.parse_program());
}

std::string format(const Node& root) {
    std::string out;
    emit(root, 0, out);
    return out;
}

std::string format(const Program& program) { return format(program.root()); }

} // namespace sqry
