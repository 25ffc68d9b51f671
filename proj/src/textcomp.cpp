#include "sqry/textcomp.hpp"

#include "sqry/codec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sqry {

bool is_word_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.' || c == '-';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        bool word = is_word_char(text[i]);
        std::size_t start = i;
        while (i < text.size() && is_word_char(text[i]) == word)
            ++i;
        out.push_back({std::string(text.substr(start, i - start)), word});
    }
    return out;
}

Dictionary::Dictionary(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!index_.emplace(entries_[i].word, i).second)
            throw std::invalid_argument("duplicate dictionary word \"" + entries_[i].word + "\"");
}

Dictionary Dictionary::from_words(std::vector<std::string> words) {
    std::vector<Entry> entries;
    entries.reserve(words.size());
    for (auto& w : words)
        entries.push_back({std::move(w), 0});
    return Dictionary(std::move(entries));
}

unsigned Dictionary::key_bits() const noexcept {
    if (entries_.size() <= 2)
        return 1;
    return static_cast<unsigned>(std::bit_width(entries_.size() - 1));
}

std::optional<std::size_t> Dictionary::find(std::string_view word) const {
    auto it = index_.find(std::string(word));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Dictionary::total_chars() const noexcept {
    std::size_t n = 0;
    for (const auto& e : entries_)
        n += e.word.size();
    return n;
}

namespace {

std::size_t corpus_bits(const std::vector<std::string>& corpus, const Dictionary& dict) {
    std::size_t total = 0;
    if (dict.empty()) {
        for (const auto& s : corpus)
            total += plain_string_bits(s);
        return total;
    }
    total = dictionary_bits(dict);
    for (const auto& s : corpus)
        total += compressed_string_bits(segment(s, dict), dict);
    return total;
}

Dictionary without(const Dictionary& dict, std::size_t skip) {
    std::vector<Dictionary::Entry> kept;
    for (std::size_t i = 0; i < dict.size(); ++i)
        if (i != skip)
            kept.push_back(dict.entries()[i]);
    return Dictionary(std::move(kept));
}

} // namespace

Dictionary build_dictionary(const std::vector<std::string>& corpus, DictionaryOptions options) {
    struct Stat {
        std::size_t count = 0;
        std::size_t first = 0;
    };
    std::unordered_map<std::string, Stat> stats;
    std::vector<std::string> order;
    for (const auto& s : corpus) {
        for (auto& tok : tokenize(s)) {
            if (!tok.is_word)
                continue;
            auto [it, inserted] = stats.try_emplace(tok.text, Stat{0, order.size()});
            if (inserted)
                order.push_back(tok.text);
            ++it->second.count;
        }
    }

    std::vector<Dictionary::Entry> entries;
    for (const auto& w : order) {
        const Stat& st = stats.at(w);
        if (st.count >= kMinOccurrences && w.size() >= kMinWordLength)
            entries.push_back({w, st.count});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.count > b.count; });
    Dictionary dict(std::move(entries));

    if (!options.gain_filter)
        return dict;

    // Repeatedly drop the least frequent word whose removal shrinks the corpus.
    bool changed = true;
    while (changed && !dict.empty()) {
        changed = false;
        std::size_t current = corpus_bits(corpus, dict);
        for (std::size_t i = dict.size(); i-- > 0;) {
            Dictionary candidate = without(dict, i);
            if (corpus_bits(corpus, candidate) < current) {
                dict = std::move(candidate);
                changed = true;
                break;
            }
        }
    }
    return dict;
}

Coding choose_coding(std::string_view text) noexcept {
    for (char c : text)
        if (static_cast<unsigned char>(c) >= 0x80)
            return Coding::Utf8;
    return Coding::Ascii7;
}

unsigned char_bits(Coding coding) noexcept { return coding == Coding::Ascii7 ? 7 : 8; }

SegmentedString segment(std::string_view text, const Dictionary& dict) {
    SegmentedString out;
    out.coding = choose_coding(text);
    for (auto& tok : tokenize(text)) {
        if (tok.is_word) {
            if (auto key = dict.find(tok.text)) {
                out.segments.push_back(DictRef{*key});
                continue;
            }
        }
        if (!out.segments.empty())
            if (auto* c = std::get_if<Constant>(&out.segments.back())) {
                c->text += tok.text;
                continue;
            }
        out.segments.push_back(Constant{std::move(tok.text)});
    }
    return out;
}

std::string reassemble(const SegmentedString& seg, const Dictionary& dict) {
    std::string out;
    for (const auto& s : seg.segments) {
        if (const auto* c = std::get_if<Constant>(&s))
            out += c->text;
        else
            out += dict.word(std::get<DictRef>(s).key);
    }
    return out;
}

std::size_t plain_string_bits(std::string_view text) {
    const std::size_t unit = char_bits(choose_coding(text));
    return 2 + unit * text.size() + unit;
}

std::size_t compressed_string_bits(const SegmentedString& seg, const Dictionary& dict) {
    const std::size_t unit = char_bits(seg.coding);
    std::size_t bits = 2 + unit; // coding + ETX
    for (const auto& s : seg.segments) {
        if (const auto* c = std::get_if<Constant>(&s))
            bits += 1 + unit * c->text.size();
        else
            bits += 1 + dict.key_bits();
    }
    if (seg.segments.size() > 1)
        bits += unit * (seg.segments.size() - 1); // NUL separators
    return bits;
}

std::size_t dictionary_bits(const Dictionary& dict) {
    std::size_t bits = kCommandBits + kCommandBits + exp_int_bits(static_cast<std::int64_t>(dict.size()));
    for (const auto& e : dict.entries())
        bits += plain_string_bits(e.word);
    return bits;
}

} // namespace sqry
