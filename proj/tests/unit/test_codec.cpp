#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/codec.hpp"
#include "sqry/error.hpp"
#include "sqry/packaging.hpp"

#include <doctest.h>

#include <optional>

using namespace sqry;
using sqry::testing::golden_vectors;

namespace {

std::string bits_of(const BitBuffer& b) { return b.to_string(); }

std::vector<std::string> words_of(const Dictionary& d) {
    std::vector<std::string> out;
    for (const auto& e : d.entries())
        out.push_back(e.word);
    return out;
}

std::string plain_bits(std::string_view text) {
    BitBuffer b;
    write_plain_string(b, text);
    return b.to_string();
}

std::string compressed_bits(std::string_view text, const Dictionary& dict) {
    BitBuffer b;
    write_compressed_string(b, segment(text, dict), dict);
    return b.to_string();
}

const Dictionary& example_dict() {
    static const Dictionary d = Dictionary::from_words({"Wi-Fi", "activity", "detected"});
    return d;
}

// Reference decoder for a bit string: value and consumed length, or nullopt
// when the prefix is not a valid code.
struct RefResult {
    bool truncated = false;
    bool valid = false;
    std::int64_t value = 0;
    std::size_t used = 0;
};

RefResult reference_exp_decode(const std::string& s) {
    RefResult r;
    std::string payload;
    std::size_t pos = 0;
    for (;;) {
        if (pos + 4 > s.size()) {
            r.truncated = true;
            return r;
        }
        payload += s.substr(pos + 1, 3);
        const bool more = s[pos] == '1';
        pos += 4;
        if (!more)
            break;
    }
    r.used = pos;
    const std::size_t k = payload.size() / 3;
    const bool negative = payload[0] == '1';
    std::uint64_t mag = 0;
    for (std::size_t i = 1; i < payload.size(); ++i)
        mag = mag * 2 + (payload[i] == '1');
    std::size_t width = 0;
    for (std::uint64_t m = mag; m; m >>= 1)
        ++width;
    const bool minimal = k == 1 || width > 3 * (k - 1) - 1;
    r.valid = minimal && !(negative && mag == 0);
    r.value = negative ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
    return r;
}

} // namespace

TEST_SUITE("exp_int") {
    TEST_CASE("anchors") {
        CHECK(bits_of(encode_exp_int(3)) == "0011");
        CHECK(bits_of(encode_exp_int(0)) == "0000");
        CHECK(bits_of(encode_exp_int(-3)) == "0111");
        CHECK(bits_of(encode_exp_int(4)) == "10000100");
        CHECK(bits_of(encode_exp_int(20)) == "10100100");
        CHECK(encode_exp_int(20).size() == 8);
        CHECK(bits_of(encode_exp_int(-20)) == "11100100");
    }

    TEST_CASE("golden vectors") {
        auto v = golden_vectors();
        for (std::int64_t n : {0, 1, 3, -1, -3, 4, 20, -20, 1000, -1000, 9600}) {
            std::string name = "exp_" + (n < 0 ? "neg" + std::to_string(-n) : std::to_string(n));
            INFO(name);
            REQUIRE(v.count(name));
            CHECK(bits_of(encode_exp_int(n)) == v[name]);
            CHECK(exp_int_bits(n) == v[name].size());
        }
    }

    TEST_CASE("decoder agrees with a reference on every stream up to 12 bits") {
        for (std::size_t len = 0; len <= 12; ++len) {
            for (std::uint32_t v = 0; v < (1u << len); ++v) {
                std::string s;
                for (std::size_t i = 0; i < len; ++i)
                    s += (v >> (len - 1 - i)) & 1 ? '1' : '0';
                RefResult ref = reference_exp_decode(s);
                BitBuffer buf = BitBuffer::from_string(s);
                BitReader in(buf);
                INFO(s);
                if (ref.truncated || !ref.valid) {
                    CHECK_THROWS_AS(read_exp_int(in), DecodeError);
                } else {
                    CHECK(read_exp_int(in) == ref.value);
                    CHECK(in.position() == ref.used);
                    CHECK(bits_of(encode_exp_int(ref.value)) == s.substr(0, ref.used));
                }
            }
        }
    }

    TEST_CASE("round trip over a dense range") {
        BitBuffer buf;
        for (std::int64_t n = -1'000'000; n <= 1'000'000; ++n)
            write_exp_int(buf, n);
        BitReader in(buf);
        bool ok = true;
        for (std::int64_t n = -1'000'000; n <= 1'000'000 && ok; ++n)
            ok = read_exp_int(in) == n;
        CHECK(ok);
        CHECK(in.at_end());
    }

    TEST_CASE("round trip over random 64-bit values") {
        sqry::testing::Rng rng(7);
        for (int i = 0; i < 20000; ++i) {
            std::int64_t n = sqry::testing::random_int(rng);
            BitBuffer b = encode_exp_int(n);
            BitReader in(b);
            REQUIRE(read_exp_int(in) == n);
            CHECK(in.at_end());
            CHECK(b.size() == exp_int_bits(n));
        }
    }

    TEST_CASE("extremes") {
        for (std::int64_t n : {INT64_MIN, INT64_MIN + 1, INT64_MAX}) {
            BitBuffer b = encode_exp_int(n);
            CHECK(b.size() == 88);
            BitReader in(b);
            CHECK(read_exp_int(in) == n);
        }
    }

    TEST_CASE("rejects out of range magnitudes") {
        // 22 groups, positive, magnitude 2^63
        std::string s;
        std::string payload = "0" + std::string(65 - 64, '0') + "1" + std::string(63, '0');
        REQUIRE(payload.size() == 66);
        for (std::size_t g = 0; g < 22; ++g)
            s += std::string(g + 1 < 22 ? "1" : "0") + payload.substr(3 * g, 3);
        BitBuffer b = BitBuffer::from_string(s);
        BitReader in(b);
        CHECK_THROWS_AS(read_exp_int(in), DecodeError);

        BitBuffer longer = BitBuffer::from_string(std::string(23 * 4, '1'));
        BitReader in2(longer);
        CHECK_THROWS_AS(read_exp_int(in2), DecodeError);
    }

    TEST_CASE("codes are prefix-free") {
        sqry::testing::Rng rng(11);
        std::vector<std::int64_t> values;
        for (int i = 0; i < 400; ++i)
            values.push_back(sqry::testing::random_int(rng));
        BitBuffer buf;
        for (auto v : values)
            write_exp_int(buf, v);
        BitReader in(buf);
        for (auto v : values)
            REQUIRE(read_exp_int(in) == v);
        CHECK(in.at_end());
    }
}

TEST_SUITE("strings") {
    TEST_CASE("plain golden vectors") {
        auto v = golden_vectors();
        CHECK(plain_bits("") == v["plain_empty"]);
        CHECK(plain_bits("hi") == v["plain_hi"]);
        CHECK(plain_bits("é") == v["plain_utf8_e_acute"]);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(plain_bits(sqry::testing::example_strings()[i]) == v["plain_example_" + std::to_string(i)]);
    }

    TEST_CASE("plain size law") {
        CHECK(plain_bits("").size() == 9);
        CHECK(plain_bits("Wi-Fi activity detected").size() == 9 + 7 * 23);
        CHECK(plain_bits("é").size() == 2 + 8 * 2 + 8);
    }

    TEST_CASE("plain rejects framing bytes") {
        BitBuffer b;
        CHECK_THROWS_AS(write_plain_string(b, std::string("a\0b", 3)), EncodeError);
        CHECK_THROWS_AS(write_plain_string(b, "a\x03"), EncodeError);
        CHECK_THROWS_AS(write_plain_string(b, "é", Coding::Ascii7), EncodeError);
    }

    TEST_CASE("plain round trip") {
        sqry::testing::Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            std::string s = sqry::testing::random_text(rng, 12);
            BitBuffer b;
            write_plain_string(b, s);
            CHECK(b.size() == plain_string_bits(s));
            BitReader in(b);
            REQUIRE(read_plain_string(in) == s);
            CHECK(in.at_end());
        }
    }

    TEST_CASE("plain decode errors") {
        BitBuffer unsupported = BitBuffer::from_string("10 0000011");
        BitReader a(unsupported);
        CHECK_THROWS_AS(read_plain_string(a), DecodeError);

        BitBuffer truncated = BitBuffer::from_string("00 1101000");
        BitReader b(truncated);
        CHECK_THROWS_AS(read_plain_string(b), DecodeError);

        BitBuffer nul = BitBuffer::from_string("00 1101000 0000000 0000011");
        BitReader c(nul);
        CHECK_THROWS_AS(read_plain_string(c), DecodeError);
    }

    TEST_CASE("compressed golden vectors") {
        auto v = golden_vectors();
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(compressed_bits(sqry::testing::example_strings()[i], example_dict()) ==
                  v["compressed_example_" + std::to_string(i)]);
        CHECK(compressed_bits("", example_dict()) == v["compressed_empty_example"]);
        CHECK(compressed_bits("hi", example_dict()) == v["compressed_hi_example"]);
        CHECK(compressed_bits("Wi-Fi café", example_dict()) == v["compressed_utf8_example"]);
    }

    TEST_CASE("compressed sizes of the three example strings") {
        CHECK(compressed_bits(sqry::testing::example_strings()[0], example_dict()).size() == 62);
        CHECK(compressed_bits(sqry::testing::example_strings()[1], example_dict()).size() == 90);
        CHECK(compressed_bits(sqry::testing::example_strings()[2], example_dict()).size() == 199);
    }

    TEST_CASE("compressed round trip and cost model") {
        sqry::testing::Rng rng(5);
        std::vector<std::string> corpus;
        for (int i = 0; i < 200; ++i)
            corpus.push_back(sqry::testing::random_text(rng, 10));
        Dictionary dict = build_dictionary(corpus);
        REQUIRE(!dict.empty());
        for (int i = 0; i < 1000; ++i) {
            std::string s = sqry::testing::random_text(rng, 10);
            SegmentedString seg = segment(s, dict);
            BitBuffer b;
            write_compressed_string(b, seg, dict);
            CHECK(b.size() == compressed_string_bits(seg, dict));
            BitReader in(b);
            REQUIRE(read_compressed_string(in, dict) == s);
            CHECK(in.at_end());
        }
    }

    TEST_CASE("compressed string cannot open with 0x06 or 0x07") {
        BitBuffer b;
        CHECK_THROWS_AS(write_compressed_string(b, segment("\x06x", example_dict()), example_dict()), EncodeError);
        CHECK_THROWS_AS(write_compressed_string(b, segment("\x07", example_dict()), example_dict()), EncodeError);
        BitBuffer ok;
        write_compressed_string(ok, segment("x\x06", example_dict()), example_dict());
        BitReader in(ok);
        CHECK(read_compressed_string(in, example_dict()) == "x\x06");
    }

    TEST_CASE("compressed decode errors") {
        // key 3 is outside a three-word dictionary
        BitBuffer bad_key = BitBuffer::from_string("00 1 11 0000011");
        BitReader a(bad_key);
        CHECK_THROWS_AS(read_compressed_string(a, example_dict()), DecodeError);

        // key followed by a character instead of NUL/ETX
        BitBuffer no_sep = BitBuffer::from_string("00 1 00 1101000 0000011");
        BitReader b(no_sep);
        CHECK_THROWS_AS(read_compressed_string(b, example_dict()), DecodeError);

        BitBuffer truncated = BitBuffer::from_string("00 0 1101000");
        BitReader c(truncated);
        CHECK_THROWS_AS(read_compressed_string(c, example_dict()), DecodeError);
    }
}

TEST_SUITE("dictionary") {
    TEST_CASE("golden vectors") {
        auto v = golden_vectors();
        BitBuffer b;
        write_dictionary(b, example_dict());
        CHECK(b.to_string() == v["dict_example"]);
        CHECK(b.size() == 184);
        CHECK(dictionary_bits(example_dict()) == 184);

        BitBuffer c;
        write_dictionary(c, Dictionary::from_words({"abc"}));
        CHECK(c.to_string() == v["dict_abc"]);
    }

    TEST_CASE("round trip") {
        BitBuffer b;
        write_dictionary(b, example_dict());
        BitReader in(b);
        REQUIRE(in.read(kCommandBits) == kCmdDictLocal);
        CHECK(words_of(read_dictionary_body(in)) == words_of(example_dict()));
        CHECK(in.at_end());
    }

    TEST_CASE("errors") {
        BitBuffer b;
        CHECK_THROWS_AS(write_dictionary(b, Dictionary{}), EncodeError);

        BitBuffer zero = BitBuffer::from_string("000 0000");
        BitReader a(zero);
        CHECK_THROWS_AS(read_dictionary_body(a), DecodeError);

        BitBuffer trailer = BitBuffer::from_string("001 0001 00 1100001 1100010 1100011 0000011");
        BitReader c(trailer);
        CHECK_THROWS_AS(read_dictionary_body(c), DecodeError);

        BitBuffer dup;
        dup.write(0, 3);
        write_exp_int(dup, 2);
        write_plain_string(dup, "abc");
        write_plain_string(dup, "abc");
        BitReader d(dup);
        CHECK_THROWS_AS(read_dictionary_body(d), DecodeError);
    }
}

TEST_SUITE("programs") {
    TEST_CASE("golden program layouts") {
        auto v = golden_vectors();
        CHECK(encode_program(Program(make_exit())).bits().to_string() == v["program_exit"]);
        CHECK(v["program_exit"] == "000100000");
        CHECK(encode_program(Program(make_print("No power"))).bits().to_string() == v["program_print"]);
        CHECK(encode_program(Program(make_ask("Q?", {{"A", make_print("X")}, {"B", make_exit()}})))
                  .bits()
                  .to_string() == v["program_ask"]);
        CHECK(encode_program(Program(make_ask_numeric("N?", {{10, make_exit()}, {-5, make_exit()}},
                                                      make_print("low"))))
                  .bits()
                  .to_string() == v["program_ask_numeric"]);
        CHECK(encode_program(Program(make_ask("What?", {{"Wi-Fi activity", make_exit()}})), example_dict())
                  .bits()
                  .to_string() == v["program_ask_dict"]);
    }

    TEST_CASE("hand layout of the three-string example") {
        // Header: version 0001, DICT_LOCAL (6 + exp(3) + three plain words), END_HEADER.
        std::size_t words = (9 + 7 * 5) + (9 + 7 * 8) + (9 + 7 * 8);
        std::size_t dict = 3 + 3 + 4 + words;
        CHECK(dict == 184);
        // "Wi-Fi activity detected": coding, ref, NUL, " ", NUL, ref, NUL, " ", NUL, ref, ETX
        std::size_t s0 = 2 + 3 + 7 + 8 + 7 + 3 + 7 + 8 + 7 + 3 + 7;
        // "Wi-Fi activity not detected": as above with " not " as the middle constant
        std::size_t s1 = 2 + 3 + 7 + 8 + 7 + 3 + 7 + (1 + 7 * 5) + 7 + 3 + 7;
        // "Wi-Fi 802.11ax activity at 9600 Mbps"
        std::size_t s2 = 2 + 3 + 7 + (1 + 7 * 10) + 7 + 3 + 7 + (1 + 7 * 13) + 7;
        CHECK(s0 == 62);
        CHECK(s1 == 90);
        CHECK(s2 == 199);
        CHECK(dict + s0 + s1 + s2 == 535);
    }

    TEST_CASE("accounting fields") {
        Program p = sqry::testing::wifi_program();
        EncodedPayload plain = encode_program(p);
        CHECK(plain.dictionary_bits == 0);
        CHECK(plain.string_bits == 6524);
        CHECK(plain.header.size() == 7);

        Dictionary d = build_dictionary(p.strings());
        EncodedPayload comp = encode_program(p, d);
        CHECK(comp.dictionary_bits == dictionary_bits(d));
        CHECK(comp.header.size() == 7 + comp.dictionary_bits);
        std::size_t expected = 0;
        for (const auto& s : p.strings())
            expected += compressed_string_bits(segment(s, d), d);
        CHECK(comp.string_bits == expected);
        CHECK(comp.body.size() - comp.string_bits == plain.body.size() - plain.string_bits);
    }

    TEST_CASE("round trip of generated programs") {
        sqry::testing::Rng rng(13);
        for (int i = 0; i < 1000; ++i) {
            Program p = sqry::testing::random_program(rng);
            std::optional<Dictionary> dict;
            if (i % 2) {
                Dictionary d = build_dictionary(p.strings());
                if (!d.empty())
                    dict = d;
            }
            EncodedPayload e = encode_program(p, dict);
            DecodedProgram back = decode_program(e.bits());
            REQUIRE(back.program == p);
            REQUIRE(back.dictionary.has_value() == dict.has_value());
            if (dict)
                CHECK(words_of(*back.dictionary) == words_of(*dict));
            CHECK(back.end_bit == e.total_bits());
            CHECK(decode_program_bytes(pack(e, QrBudget{1u << 30})).program == p);
        }
    }

    TEST_CASE("header errors") {
        CHECK_THROWS_WITH_AS(decode_program(BitBuffer::from_string("0010 000 00")), "unsupported format version 2",
                             DecodeError);
        CHECK_THROWS_WITH_AS(decode_program(BitBuffer::from_string("0001 110 000 00")),
                             "unknown header command 110", DecodeError);
        BitBuffer twice;
        twice.write(kFormatVersion, 4);
        write_dictionary(twice, example_dict());
        write_dictionary(twice, example_dict());
        twice.write(0, 3);
        twice.write(0, 2);
        CHECK_THROWS_AS(decode_program(twice), DecodeError);
    }

    TEST_CASE("body errors") {
        CHECK_THROWS_AS(decode_program(BitBuffer::from_string("0001 000")), DecodeError);
        // ask with zero branches
        CHECK_THROWS_AS(decode_program(BitBuffer::from_string("0001 000 10 00 0000011 0000")), DecodeError);
        // numeric thresholds not decreasing
        CHECK_THROWS_AS(decode_program(BitBuffer::from_string("0001 000 11 00 0000011 0010 0001 00 0010 00 0")),
                        DecodeError);
        // duplicate answers
        CHECK_THROWS_AS(
            decode_program(BitBuffer::from_string("0001 000 10 00 0000011 0010 00 0000011 00 00 0000011 00")),
            DecodeError);
    }

    TEST_CASE("truncation anywhere is an error") {
        Program p = sqry::testing::wifi_program();
        BitBuffer full = encode_program(p, build_dictionary(p.strings())).bits();
        std::string s = full.to_string();
        for (std::size_t cut = 0; cut < s.size(); cut += 37)
            CHECK_THROWS_AS(decode_program(BitBuffer::from_string(s.substr(0, cut))), DecodeError);
    }

    TEST_CASE("padding checks on byte payloads") {
        EncodedPayload e = encode_program(Program(make_exit())); // 9 bits
        std::vector<std::uint8_t> bytes = pack(e);
        REQUIRE(bytes.size() == 2);
        CHECK_NOTHROW(decode_program_bytes(bytes));
        bytes[1] |= 0x01;
        CHECK_THROWS_AS(decode_program_bytes(bytes), DecodeError);
        bytes[1] &= 0xfe;
        bytes.push_back(0);
        CHECK_THROWS_AS(decode_program_bytes(bytes), DecodeError);
    }
}
