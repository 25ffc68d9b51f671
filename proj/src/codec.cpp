#include "sqry/codec.hpp"

#include "sqry/error.hpp"

#include <bit>
#include <set>

namespace sqry {

namespace {

constexpr unsigned kGroupPayload = 3;
// 64 magnitude bits plus the sign need at most 22 groups.
constexpr std::size_t kMaxGroups = 22;
constexpr std::size_t kMaxDepth = 10000;

std::uint64_t magnitude_of(std::int64_t value) noexcept {
    return value < 0 ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
}

std::size_t group_count(std::uint64_t magnitude) noexcept {
    const auto width = static_cast<std::size_t>(std::bit_width(magnitude));
    // smallest k with 3k - 1 >= width
    return width == 0 ? 1 : (width + 1 + kGroupPayload - 1) / kGroupPayload;
}

} // namespace

std::size_t exp_int_bits(std::int64_t value) noexcept {
    return group_count(magnitude_of(value)) * (1 + kGroupPayload);
}

void write_exp_int(BitBuffer& out, std::int64_t value) {
    const std::uint64_t mag = magnitude_of(value);
    const std::size_t groups = group_count(mag);
    const std::size_t field = groups * kGroupPayload - 1; // magnitude width
    std::size_t j = 0;                                  // payload bit index
    for (std::size_t g = 0; g < groups; ++g) {
        out.push_back(g + 1 < groups);
        for (unsigned b = 0; b < kGroupPayload; ++b, ++j) {
            if (j == 0) {
                out.push_back(value < 0);
            } else {
                std::size_t shift = field - j;
                out.push_back(shift < 64 && ((mag >> shift) & 1u));
            }
        }
    }
}

BitBuffer encode_exp_int(std::int64_t value) {
    BitBuffer out;
    write_exp_int(out, value);
    return out;
}

std::int64_t read_exp_int(BitReader& in) {
    bool negative = false;
    std::uint64_t mag = 0;
    std::size_t groups = 0;
    bool more = true;
    bool overflow = false;
    while (more) {
        if (++groups > kMaxGroups)
            throw DecodeError("exponential integer longer than 64 bits");
        more = in.read_bit();
        for (unsigned b = 0; b < kGroupPayload; ++b) {
            bool bit = in.read_bit();
            if (groups == 1 && b == 0) {
                negative = bit;
                continue;
            }
            if (mag >> 63)
                overflow = true;
            mag = (mag << 1) | static_cast<std::uint64_t>(bit);
        }
    }
    if (overflow)
        throw DecodeError("exponential integer exceeds 64 bits");
    if (group_count(mag) != groups)
        throw DecodeError("non-minimal exponential integer");
    if (negative && mag == 0)
        throw DecodeError("exponential integer encodes negative zero");
    if (!negative && mag > static_cast<std::uint64_t>(INT64_MAX))
        throw DecodeError("exponential integer exceeds 64 bits");
    if (negative && mag > (static_cast<std::uint64_t>(INT64_MAX) + 1))
        throw DecodeError("exponential integer exceeds 64 bits");
    return negative ? static_cast<std::int64_t>(~mag + 1) : static_cast<std::int64_t>(mag);
}

namespace {

void write_units(BitBuffer& out, std::string_view text, Coding coding) {
    const unsigned unit = char_bits(coding);
    for (char ch : text) {
        auto c = static_cast<unsigned char>(ch);
        if (c == kNul || c == kEtx)
            throw EncodeError("string contains a NUL or ETX character");
        if (coding == Coding::Ascii7 && c >= 0x80)
            throw EncodeError("non-ASCII character in ASCII-7 string");
        out.write(c, unit);
    }
}

Coding read_coding(BitReader& in) {
    auto bits = static_cast<unsigned>(in.read(2));
    if (bits == static_cast<unsigned>(Coding::Ascii7))
        return Coding::Ascii7;
    if (bits == static_cast<unsigned>(Coding::Utf8))
        return Coding::Utf8;
    throw DecodeError("unsupported string coding " + std::to_string(bits));
}

} // namespace

void write_plain_string(BitBuffer& out, std::string_view text, Coding coding) {
    out.write(static_cast<unsigned>(coding), 2);
    write_units(out, text, coding);
    out.write(kEtx, char_bits(coding));
}

void write_plain_string(BitBuffer& out, std::string_view text) {
    write_plain_string(out, text, choose_coding(text));
}

std::string read_plain_string(BitReader& in) {
    const unsigned unit = char_bits(read_coding(in));
    std::string text;
    for (;;) {
        auto c = static_cast<unsigned char>(in.read(unit));
        if (c == kEtx)
            return text;
        if (c == kNul)
            throw DecodeError("NUL inside a plain string");
        text.push_back(static_cast<char>(c));
    }
}

void write_compressed_string(BitBuffer& out, const SegmentedString& seg, const Dictionary& dict) {
    const unsigned unit = char_bits(seg.coding);
    if (!seg.segments.empty()) {
        if (const auto* c = std::get_if<Constant>(&seg.segments.front()); c && !c->text.empty()) {
            auto first = static_cast<unsigned char>(c->text.front());
            if (first == 0x06 || first == 0x07)
                throw EncodeError("compressed string cannot start with control character 0x06/0x07");
        }
    }
    out.write(static_cast<unsigned>(seg.coding), 2);
    for (std::size_t i = 0; i < seg.segments.size(); ++i) {
        if (i > 0)
            out.write(kNul, unit);
        const Segment& s = seg.segments[i];
        if (const auto* c = std::get_if<Constant>(&s)) {
            if (c->text.empty())
                throw EncodeError("empty constant sub-string");
            out.push_back(false);
            write_units(out, c->text, seg.coding);
        } else {
            std::size_t key = std::get<DictRef>(s).key;
            if (key >= dict.size())
                throw EncodeError("dictionary key " + std::to_string(key) + " out of range");
            out.push_back(true);
            out.write(key, dict.key_bits());
        }
    }
    out.write(kEtx, unit);
}

std::string read_compressed_string(BitReader& in, const Dictionary& dict) {
    const unsigned unit = char_bits(read_coding(in));
    {
        BitReader probe = in;
        if (probe.remaining() >= unit && probe.read(unit) == kEtx) {
            in = probe;
            return {};
        }
    }
    std::string text;
    for (;;) {
        unsigned char terminator = 0;
        if (in.read_bit()) {
            if (dict.empty())
                throw DecodeError("dictionary reference without a dictionary");
            auto key = static_cast<std::size_t>(in.read(dict.key_bits()));
            if (key >= dict.size())
                throw DecodeError("dictionary key " + std::to_string(key) + " out of range");
            text += dict.word(key);
            terminator = static_cast<unsigned char>(in.read(unit));
            if (terminator != kNul && terminator != kEtx)
                throw DecodeError("expected NUL or ETX after dictionary key");
        } else {
            std::size_t chars = 0;
            for (;;) {
                auto c = static_cast<unsigned char>(in.read(unit));
                if (c == kNul || c == kEtx) {
                    terminator = c;
                    break;
                }
                text.push_back(static_cast<char>(c));
                ++chars;
            }
            if (chars == 0)
                throw DecodeError("empty constant sub-string");
        }
        if (terminator == kEtx)
            return text;
    }
}

void write_dictionary(BitBuffer& out, const Dictionary& dict) {
    if (dict.empty())
        throw EncodeError("cannot encode an empty dictionary");
    out.write(kCmdDictLocal, kCommandBits);
    out.write(kDictLocalTrailer, kCommandBits);
    write_exp_int(out, static_cast<std::int64_t>(dict.size()));
    for (const auto& e : dict.entries())
        write_plain_string(out, e.word);
}

Dictionary read_dictionary_body(BitReader& in) {
    if (in.read(kCommandBits) != kDictLocalTrailer)
        throw DecodeError("malformed DICT_LOCAL command");
    std::int64_t count = read_exp_int(in);
    if (count <= 0)
        throw DecodeError("dictionary word count must be positive");
    std::vector<std::string> words;
    std::set<std::string> seen;
    for (std::int64_t i = 0; i < count; ++i) {
        std::string w = read_plain_string(in);
        if (!seen.insert(w).second)
            throw DecodeError("duplicate dictionary word \"" + w + "\"");
        words.push_back(std::move(w));
    }
    return Dictionary::from_words(std::move(words));
}

BitBuffer EncodedPayload::bits() const {
    BitBuffer out = header;
    out.append(body);
    return out;
}

namespace {

class ProgramWriter {
public:
    ProgramWriter(const std::optional<Dictionary>& dict, EncodedPayload& payload)
        : dict_(dict), payload_(payload) {}

    void node(const Node& n) {
        BitBuffer& out = payload_.body;
        std::visit(Overloaded{
                       [&](const Exit&) { tag(NodeTag::Exit); },
                       [&](const Print& p) {
                           tag(NodeTag::Print);
                           string(p.text);
                           node(*p.next);
                       },
                       [&](const Ask& a) {
                           tag(NodeTag::Ask);
                           string(a.prompt);
                           write_exp_int(out, static_cast<std::int64_t>(a.branches.size()));
                           for (const auto& b : a.branches) {
                               string(b.match);
                               node(*b.child);
                           }
                       },
                       [&](const AskNumeric& a) {
                           tag(NodeTag::AskNumeric);
                           string(a.prompt);
                           write_exp_int(out, static_cast<std::int64_t>(a.thresholds.size()));
                           for (const auto& t : a.thresholds) {
                               write_exp_int(out, t.limit);
                               node(*t.child);
                           }
                           out.push_back(a.otherwise.has_value());
                           if (a.otherwise)
                               node(**a.otherwise);
                       },
                   },
                   n.value);
    }

private:
    void tag(NodeTag t) { payload_.body.write(static_cast<unsigned>(t), kTagBits); }

    void string(const std::string& text) {
        BitBuffer& out = payload_.body;
        const std::size_t before = out.size();
        if (dict_)
            write_compressed_string(out, segment(text, *dict_), *dict_);
        else
            write_plain_string(out, text);
        payload_.string_bits += out.size() - before;
    }

    const std::optional<Dictionary>& dict_;
    EncodedPayload& payload_;
};

class ProgramReader {
public:
    ProgramReader(BitReader& in, const std::optional<Dictionary>& dict) : in_(in), dict_(dict) {}

    Node node(std::size_t depth = 0) {
        if (depth > kMaxDepth)
            throw DecodeError("program tree nested too deeply");
        switch (static_cast<NodeTag>(in_.read(kTagBits))) {
        case NodeTag::Exit:
            return make_exit();
        case NodeTag::Print: {
            std::string text = string();
            return make_print(std::move(text), node(depth + 1));
        }
        case NodeTag::Ask: {
            Ask ask;
            ask.prompt = string();
            std::int64_t n = read_exp_int(in_);
            if (n <= 0)
                throw DecodeError("question needs at least one branch");
            for (std::int64_t i = 0; i < n; ++i) {
                std::string match = string();
                ask.branches.push_back(Branch{std::move(match), Box<Node>(node(depth + 1))});
            }
            return Node{std::move(ask)};
        }
        case NodeTag::AskNumeric: {
            AskNumeric ask;
            ask.prompt = string();
            std::int64_t n = read_exp_int(in_);
            if (n <= 0)
                throw DecodeError("numeric question needs at least one threshold");
            for (std::int64_t i = 0; i < n; ++i) {
                std::int64_t limit = read_exp_int(in_);
                ask.thresholds.push_back(Threshold{limit, Box<Node>(node(depth + 1))});
            }
            if (in_.read_bit())
                ask.otherwise = Box<Node>(node(depth + 1));
            return Node{std::move(ask)};
        }
        }
        throw DecodeError("unknown node tag");
    }

private:
    std::string string() { return dict_ ? read_compressed_string(in_, *dict_) : read_plain_string(in_); }

    BitReader& in_;
    const std::optional<Dictionary>& dict_;
};

} // namespace

EncodedPayload encode_program(const Program& program, const std::optional<Dictionary>& dict) {
    EncodedPayload payload;
    payload.header.write(kFormatVersion, kVersionBits);
    if (dict) {
        const std::size_t before = payload.header.size();
        write_dictionary(payload.header, *dict);
        payload.dictionary_bits = payload.header.size() - before;
    }
    payload.header.write(kCmdEndHeader, kCommandBits);
    ProgramWriter(dict, payload).node(program.root());
    return payload;
}

DecodedProgram decode_program(const BitBuffer& bits) {
    BitReader in(bits);
    auto version = static_cast<unsigned>(in.read(kVersionBits));
    if (version != kFormatVersion)
        throw DecodeError("unsupported format version " + std::to_string(version));

    std::optional<Dictionary> dict;
    for (;;) {
        auto cmd = static_cast<unsigned>(in.read(kCommandBits));
        if (cmd == kCmdEndHeader)
            break;
        if (cmd != kCmdDictLocal) {
            BitBuffer pattern;
            pattern.write(cmd, kCommandBits);
            throw DecodeError("unknown header command " + pattern.to_string());
        }
        if (dict)
            throw DecodeError("duplicate DICT_LOCAL command");
        dict = read_dictionary_body(in);
    }

    Node root = ProgramReader(in, dict).node();
    try {
        return DecodedProgram{Program(std::move(root)), std::move(dict), in.position()};
    } catch (const InvalidProgram& e) {
        throw DecodeError(std::string("invalid program: ") + e.what());
    }
}

DecodedProgram decode_program_bytes(std::span<const std::uint8_t> bytes) {
    BitBuffer bits = BitBuffer::from_bytes(bytes);
    DecodedProgram decoded = decode_program(bits);
    const std::size_t trailing = bits.size() - decoded.end_bit;
    if (trailing >= 8)
        throw DecodeError("trailing data after program (" + std::to_string(trailing) + " bits)");
    for (std::size_t i = decoded.end_bit; i < bits.size(); ++i)
        if (bits[i])
            throw DecodeError("non-zero padding after program");
    return decoded;
}

} // namespace sqry
