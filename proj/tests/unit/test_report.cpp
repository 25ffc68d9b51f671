#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/codec.hpp"
#include "sqry/report.hpp"

#include <doctest.h>

#include <map>
#include <sstream>

using namespace sqry;

namespace {

std::map<std::string, std::string> key_values(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (auto eq = line.find('='); eq != std::string::npos)
            out[line.substr(0, eq)] = line.substr(eq + 1);
    return out;
}

} // namespace

TEST_CASE("compile picks the dictionary for the access point program") {
    Program p = sqry::testing::wifi_program();
    CompileResult on = compile(p);
    CompileResult off = compile(p, {false, {}});
    REQUIRE(on.dictionary.has_value());
    CHECK_FALSE(off.dictionary.has_value());
    CHECK(on.payload.total_bits() < off.payload.total_bits());
    CHECK(decode_program(on.payload.bits()).program == p);
    CHECK(decode_program(off.payload.bits()).program == p);
}

TEST_CASE("compile falls back to plain strings when the dictionary does not pay") {
    Program p(make_print("abc abc"));
    CompileResult r = compile(p);
    CHECK_FALSE(r.dictionary.has_value());
    CHECK(r.payload.dictionary_bits == 0);
    CHECK(r.payload.total_bits() == compile(p, {false, {}}).payload.total_bits());
}

TEST_CASE("compressed payload is never larger than the plain one") {
    sqry::testing::Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        Program p = sqry::testing::random_program(rng);
        CHECK(compile(p).payload.total_bits() <= compile(p, {false, {}}).payload.total_bits());
    }
}

TEST_CASE("report fields are consistent") {
    Program p = sqry::testing::wifi_program();
    CompilationReport r = make_report(p);
    CompileResult on = compile(p);
    CompileResult off = compile(p, {false, {}});
    CHECK(r.total_bits == off.payload.total_bits());
    CHECK(r.string_bits == 6524);
    CHECK(r.dictionary_bits == on.payload.dictionary_bits);
    CHECK(r.dictionary_words == on.dictionary->size());
    CHECK(r.compressed_string_bits == on.payload.string_bits + on.payload.dictionary_bits);
    CHECK(r.compressed_total_bits == on.payload.total_bits());
    // the non-string part of the payload is identical in both encodings
    CHECK(r.total_bits - r.string_bits == r.compressed_total_bits - r.compressed_string_bits);
}

TEST_CASE("percentages") {
    CHECK(CompilationReport::percent(6524, 7126) == doctest::Approx(91.6));
    CHECK(CompilationReport::percent(6516, 7126) == doctest::Approx(91.4));
    CHECK(CompilationReport::percent(1, 0) == 0.0);
}

TEST_CASE("table and key-value output") {
    CompilationReport r{7126, 6524, 950, 5907, 6516, 20};
    std::ostringstream table;
    print_table(table, r);
    CHECK(table.str().find("Strings                                     6524 bits (91.6%)") != std::string::npos);
    CHECK(table.str().find("Dictionary                                  950 bits (20 words)") != std::string::npos);
    CHECK(table.str().find("6516 bits (91.4%)") != std::string::npos);

    std::ostringstream kv;
    print_key_values(kv, r);
    auto m = key_values(kv.str());
    CHECK(m["total_bits"] == "7126");
    CHECK(m["compressed_string_bits"] == "5907");
    CHECK(m["ratio_percent"] == "91.4");
}

TEST_CASE("compression report") {
    CompressionReport r = make_compression_report(sqry::testing::example_strings());
    CHECK(r.dictionary.size() == 3);
    CHECK(r.dictionary_bits == 184);
    CHECK(r.plain_total == 629);
    CHECK(r.compressed_total == 62 + 90 + 199);
    REQUIRE(r.strings.size() == 3);
    CHECK(r.strings[0].plain_bits == 170);
    CHECK(r.strings[1].plain_bits == 198);
    CHECK(r.strings[2].plain_bits == 261);

    std::ostringstream kv;
    print_key_values(kv, r);
    auto m = key_values(kv.str());
    CHECK(m["word.0"] == "Wi-Fi");
    CHECK(m["word.2.count"] == "2");
    CHECK(m["compressed_with_dictionary_bits"] == "535");

    CompressionReport none = make_compression_report({"one", "two"});
    CHECK(none.dictionary_bits == 0);
    CHECK(none.compressed_total == none.plain_total);
}
