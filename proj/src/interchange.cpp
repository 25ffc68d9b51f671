#include "sqry/interchange.hpp"

#include "sqry/codec.hpp"
#include "sqry/error.hpp"

namespace sqry {

using nlohmann::json;

namespace {

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3 : (c >> 3) == 0x1e ? 4 : 0;
        if (len == 0 || i + len > s.size())
            return false;
        std::uint32_t cp = len == 1 ? c : c & (0x7f >> len);
        for (std::size_t k = 1; k < len; ++k) {
            const auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc >> 6) != 0x2)
                return false;
            cp = (cp << 6) | (cc & 0x3f);
        }
        static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff))
            return false;
        i += len;
    }
    return true;
}

const std::string& text(const std::string& s) {
    if (!valid_utf8(s))
        throw InterchangeError("string is not valid UTF-8: cannot be represented in JSON");
    return s;
}

json node_to_json(const Node& node) {
    return std::visit(Overloaded{
                          [](const Exit&) { return json{{"kind", "exit"}}; },
                          [](const Print& p) {
                              return json{{"kind", "print"}, {"text", text(p.text)}, {"next", node_to_json(*p.next)}};
                          },
                          [](const Ask& a) {
                              json branches = json::array();
                              for (const auto& b : a.branches)
                                  branches.push_back({{"match", text(b.match)}, {"node", node_to_json(*b.child)}});
                              return json{{"kind", "ask"}, {"prompt", text(a.prompt)}, {"branches", branches}};
                          },
                          [](const AskNumeric& a) {
                              json thresholds = json::array();
                              for (const auto& t : a.thresholds)
                                  thresholds.push_back({{"limit", t.limit}, {"node", node_to_json(*t.child)}});
                              json out{{"kind", "ask_numeric"}, {"prompt", text(a.prompt)}, {"thresholds", thresholds}};
                              if (a.otherwise)
                                  out["otherwise"] = node_to_json(**a.otherwise);
                              return out;
                          },
                      },
                      node.value);
}

const json& field(const json& obj, const char* name, const std::string& where) {
    auto it = obj.find(name);
    if (it == obj.end())
        throw InterchangeError(where + ": missing field '" + name + "'");
    return *it;
}

std::string string_field(const json& obj, const char* name, const std::string& where) {
    const json& v = field(obj, name, where);
    if (!v.is_string())
        throw InterchangeError(where + ": field '" + name + "' must be a string");
    return v.get<std::string>();
}

const json& array_field(const json& obj, const char* name, const std::string& where) {
    const json& v = field(obj, name, where);
    if (!v.is_array())
        throw InterchangeError(where + ": field '" + name + "' must be an array");
    return v;
}

Node node_from_json(const json& j, const std::string& where, std::size_t depth) {
    if (depth > 10000)
        throw InterchangeError("document nested too deeply");
    if (!j.is_object())
        throw InterchangeError(where + ": node must be an object");
    const std::string kind = string_field(j, "kind", where);
    if (kind == "exit")
        return make_exit();
    if (kind == "print")
        return make_print(string_field(j, "text", where), node_from_json(field(j, "next", where), where + ".next", depth + 1));
    if (kind == "ask") {
        Ask ask{string_field(j, "prompt", where), {}};
        const json& branches = array_field(j, "branches", where);
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const std::string at = where + ".branches[" + std::to_string(i) + "]";
            if (!branches[i].is_object())
                throw InterchangeError(at + ": branch must be an object");
            ask.branches.push_back(Branch{string_field(branches[i], "match", at),
                                          Box<Node>(node_from_json(field(branches[i], "node", at), at + ".node", depth + 1))});
        }
        return Node{std::move(ask)};
    }
    if (kind == "ask_numeric") {
        AskNumeric ask{string_field(j, "prompt", where), {}, std::nullopt};
        const json& thresholds = array_field(j, "thresholds", where);
        for (std::size_t i = 0; i < thresholds.size(); ++i) {
            const std::string at = where + ".thresholds[" + std::to_string(i) + "]";
            if (!thresholds[i].is_object())
                throw InterchangeError(at + ": threshold must be an object");
            const json& limit = field(thresholds[i], "limit", at);
            if (!limit.is_number_integer() ||
                (limit.is_number_unsigned() && limit.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)))
                throw InterchangeError(at + ": field 'limit' must be a 64-bit signed integer");
            ask.thresholds.push_back(Threshold{limit.get<std::int64_t>(),
                                               Box<Node>(node_from_json(field(thresholds[i], "node", at), at + ".node", depth + 1))});
        }
        if (auto it = j.find("otherwise"); it != j.end())
            ask.otherwise = Box<Node>(node_from_json(*it, where + ".otherwise", depth + 1));
        return Node{std::move(ask)};
    }
    throw InterchangeError(where + ": unknown node kind '" + kind + "'");
}

} // namespace

json to_interchange(const Program& program) {
    return json{{"format", kInterchangeFormat},
                {"version", kFormatVersion},
                {"root", node_to_json(program.root())}};
}

Program from_interchange(const json& document) {
    if (!document.is_object())
        throw InterchangeError("document must be a JSON object");
    if (string_field(document, "format", "document") != kInterchangeFormat)
        throw InterchangeError("document: unsupported format");
    const json& version = field(document, "version", "document");
    if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
        throw InterchangeError("document: unsupported version");
    try {
        return Program(node_from_json(field(document, "root", "document"), "root", 0));
    } catch (const InvalidProgram& e) {
        throw InterchangeError(std::string("invalid program: ") + e.what());
    }
}

} // namespace sqry
