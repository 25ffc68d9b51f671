#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/codec.hpp"
#include "sqry/textcomp.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <regex>

using namespace sqry;

namespace {

std::vector<std::pair<std::string, std::size_t>> entries_of(const Dictionary& d) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& e : d.entries())
        out.emplace_back(e.word, e.count);
    return out;
}

// Selection rule restated with std::regex and plain containers.
std::vector<std::pair<std::string, std::size_t>> reference_selection(const std::vector<std::string>& corpus) {
    std::map<std::string, std::size_t> counts;
    std::map<std::string, std::size_t> first_seen;
    std::size_t order = 0;
    const std::regex word("[a-zA-Z0-9_.-]+");
    for (const auto& s : corpus)
        for (auto it = std::sregex_iterator(s.begin(), s.end(), word); it != std::sregex_iterator(); ++it) {
            std::string w = it->str();
            ++counts[w];
            first_seen.emplace(w, order++);
        }
    std::vector<std::pair<std::string, std::size_t>> out;
    for (auto& [w, c] : counts)
        if (c >= 2 && w.size() >= 3)
            out.emplace_back(w, c);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return first_seen[a.first] < first_seen[b.first];
    });
    return out;
}

} // namespace

TEST_CASE("tokenize alternates word and separator runs") {
    auto t = tokenize("Wi-Fi 802.11ax, at_9600!");
    REQUIRE(t.size() == 6);
    CHECK(t[0] == Token{"Wi-Fi", true});
    CHECK(t[1] == Token{" ", false});
    CHECK(t[2] == Token{"802.11ax", true});
    CHECK(t[3] == Token{", ", false});
    CHECK(t[4] == Token{"at_9600", true});
    CHECK(t[5] == Token{"!", false});
    CHECK(tokenize("").empty());
    CHECK(tokenize("é").size() == 1);
    CHECK_FALSE(tokenize("é")[0].is_word);
}

TEST_CASE("three-string example dictionary") {
    Dictionary d = build_dictionary(sqry::testing::example_strings());
    std::vector<std::pair<std::string, std::size_t>> expected = {{"Wi-Fi", 3}, {"activity", 3}, {"detected", 2}};
    CHECK(entries_of(d) == expected);
    CHECK(d.key_bits() == 2);
    CHECK(dictionary_bits(d) == 184);
}

TEST_CASE("selection is case-sensitive and respects both thresholds") {
    Dictionary d = build_dictionary({"abc ABC ab ab", "abc ABC xyz"});
    std::vector<std::pair<std::string, std::size_t>> expected = {{"abc", 2}, {"ABC", 2}};
    CHECK(entries_of(d) == expected);
    CHECK(build_dictionary({"only once"}).empty());
    CHECK(build_dictionary({}).empty());
}

TEST_CASE("ties keep the order of first appearance") {
    Dictionary d = build_dictionary({"zzz yyy", "yyy zzz", "www www www"});
    std::vector<std::pair<std::string, std::size_t>> expected = {{"www", 3}, {"zzz", 2}, {"yyy", 2}};
    CHECK(entries_of(d) == expected);
}

TEST_CASE("selection agrees with an independent recount") {
    sqry::testing::Rng rng(21);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::string> corpus;
        for (int i = 0; i < 30; ++i)
            corpus.push_back(sqry::testing::random_text(rng, 10));
        CHECK(entries_of(build_dictionary(corpus)) == reference_selection(corpus));
    }
    Program p = sqry::testing::wifi_program();
    CHECK(entries_of(build_dictionary(p.strings())) == reference_selection(p.strings()));
}

TEST_CASE("key width") {
    CHECK(Dictionary::from_words({"a"}).key_bits() == 1);
    CHECK(Dictionary::from_words({"a", "b"}).key_bits() == 1);
    CHECK(Dictionary::from_words({"a", "b", "c"}).key_bits() == 2);
    CHECK(Dictionary::from_words({"a", "b", "c", "d"}).key_bits() == 2);
    CHECK(Dictionary::from_words({"a", "b", "c", "d", "e"}).key_bits() == 3);
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i)
        many.push_back("w" + std::to_string(i));
    CHECK(Dictionary::from_words(many).key_bits() == 5);
}

TEST_CASE("duplicate words are rejected") {
    CHECK_THROWS_AS(Dictionary::from_words({"abc", "abc"}), std::invalid_argument);
}

TEST_CASE("segmentation") {
    Dictionary d = build_dictionary(sqry::testing::example_strings());
    SegmentedString s = segment("Wi-Fi activity not detected", d);
    std::vector<Segment> expected = {DictRef{0}, Constant{" "}, DictRef{1}, Constant{" not "}, DictRef{2}};
    CHECK(s.segments == expected);
    CHECK(s.coding == Coding::Ascii7);

    // A dictionary word inside a longer token is not a match.
    CHECK(segment("Wi-Fi6 activity", d).segments ==
          std::vector<Segment>{Constant{"Wi-Fi6 "}, DictRef{1}});
    CHECK(segment("", d).segments.empty());
    CHECK(segment("café", d).coding == Coding::Utf8);
}

TEST_CASE("reassembly inverts segmentation") {
    sqry::testing::Rng rng(2);
    std::vector<std::string> corpus;
    for (int i = 0; i < 100; ++i)
        corpus.push_back(sqry::testing::random_text(rng));
    Dictionary d = build_dictionary(corpus);
    for (const auto& s : corpus)
        CHECK(reassemble(segment(s, d), d) == s);
    CHECK_THROWS_AS(reassemble(SegmentedString{Coding::Ascii7, {DictRef{999}}}, d), std::out_of_range);
}

TEST_CASE("cost model") {
    CHECK(plain_string_bits("") == 9);
    CHECK(plain_string_bits("abc") == 9 + 21);
    CHECK(plain_string_bits("é") == 2 + 16 + 8);
    Dictionary d = build_dictionary(sqry::testing::example_strings());
    CHECK(compressed_string_bits(segment(sqry::testing::example_strings()[0], d), d) == 62);
    CHECK(compressed_string_bits(segment("", d), d) == 9);
}

TEST_CASE("gain filter never increases corpus size") {
    auto corpus_bits = [](const std::vector<std::string>& c, const Dictionary& d) {
        if (d.empty()) {
            std::size_t n = 0;
            for (const auto& s : c)
                n += plain_string_bits(s);
            return n;
        }
        std::size_t n = dictionary_bits(d);
        for (const auto& s : c)
            n += compressed_string_bits(segment(s, d), d);
        return n;
    };
    Program p = sqry::testing::wifi_program();
    Dictionary all = build_dictionary(p.strings());
    Dictionary filtered = build_dictionary(p.strings(), DictionaryOptions{true});
    CHECK(filtered.size() <= all.size());
    CHECK(corpus_bits(p.strings(), filtered) <= corpus_bits(p.strings(), all));
    for (const auto& e : filtered.entries())
        CHECK(all.find(e.word).has_value());

    // "abc" twice in one string costs more as a dictionary entry than it saves.
    std::vector<std::string> tiny = {"abc abc"};
    CHECK(build_dictionary(tiny).size() == 1);
    CHECK(build_dictionary(tiny, DictionaryOptions{true}).empty());
}
