#include "sqry/ir.hpp"

#include "sqry/error.hpp"

#include <set>

namespace sqry {

Node make_exit() { return Node{Exit{}}; }

Node make_print(std::string text, Node next) {
    return Node{Print{std::move(text), Box<Node>(std::move(next))}};
}

Node make_ask(std::string prompt, std::vector<std::pair<std::string, Node>> branches) {
    Ask ask{std::move(prompt), {}};
    for (auto& [match, child] : branches)
        ask.branches.push_back(Branch{std::move(match), Box<Node>(std::move(child))});
    return Node{std::move(ask)};
}

Node make_ask_numeric(std::string prompt, std::vector<std::pair<std::int64_t, Node>> thresholds,
                      std::optional<Node> otherwise) {
    AskNumeric ask{std::move(prompt), {}, std::nullopt};
    for (auto& [limit, child] : thresholds)
        ask.thresholds.push_back(Threshold{limit, Box<Node>(std::move(child))});
    if (otherwise)
        ask.otherwise = Box<Node>(std::move(*otherwise));
    return Node{std::move(ask)};
}

namespace {

void collect(const Node& node, std::vector<std::string>& out) {
    std::visit(Overloaded{
                   [](const Exit&) {},
                   [&](const Print& p) {
                       out.push_back(p.text);
                       collect(*p.next, out);
                   },
                   [&](const Ask& a) {
                       out.push_back(a.prompt);
                       for (const auto& b : a.branches) {
                           out.push_back(b.match);
                           collect(*b.child, out);
                       }
                   },
                   [&](const AskNumeric& a) {
                       out.push_back(a.prompt);
                       for (const auto& t : a.thresholds)
                           collect(*t.child, out);
                       if (a.otherwise)
                           collect(**a.otherwise, out);
                   },
               },
               node.value);
}

void check_text(std::string_view text, std::string_view what) {
    if (has_forbidden_char(text))
        throw InvalidProgram(std::string(what) + " contains a NUL or ETX character");
}

void check(const Node& node) {
    std::visit(Overloaded{
                   [](const Exit&) {},
                   [](const Print& p) {
                       check_text(p.text, "print text");
                       check(*p.next);
                   },
                   [](const Ask& a) {
                       check_text(a.prompt, "prompt");
                       if (a.branches.empty())
                           throw InvalidProgram("question \"" + a.prompt + "\" has no branches");
                       std::set<std::string_view> seen;
                       for (const auto& b : a.branches) {
                           check_text(b.match, "match string");
                           if (!seen.insert(b.match).second)
                               throw InvalidProgram("duplicate answer \"" + b.match + "\" in question \"" +
                                                    a.prompt + "\"");
                           check(*b.child);
                       }
                   },
                   [](const AskNumeric& a) {
                       check_text(a.prompt, "prompt");
                       if (a.thresholds.empty())
                           throw InvalidProgram("numeric question \"" + a.prompt + "\" has no thresholds");
                       for (std::size_t i = 1; i < a.thresholds.size(); ++i)
                           if (a.thresholds[i].limit >= a.thresholds[i - 1].limit)
                               throw InvalidProgram("thresholds of \"" + a.prompt +
                                                    "\" are not strictly decreasing");
                       for (const auto& t : a.thresholds)
                           check(*t.child);
                       if (a.otherwise)
                           check(**a.otherwise);
                   },
               },
               node.value);
}

} // namespace

std::vector<std::string> collect_strings(const Node& root) {
    std::vector<std::string> out;
    collect(root, out);
    return out;
}

bool has_forbidden_char(std::string_view text) noexcept {
    return text.find('\0') != std::string_view::npos || text.find('\x03') != std::string_view::npos;
}

void validate(const Node& root) { check(root); }

Program::Program(Node root) : root_(std::move(root)) {
    validate(root_);
    strings_ = collect_strings(root_);
}

} // namespace sqry
