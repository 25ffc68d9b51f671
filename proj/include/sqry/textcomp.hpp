#pragma once

// Word-statistics string compression: tokenization, dictionary selection
// and segmentation of strings into constant and dictionary sub-strings.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace sqry {

struct Token {
    std::string text;
    bool is_word = false;
    friend bool operator==(const Token&, const Token&) = default;
};

/// Word characters are [a-zA-Z0-9_.-]; everything else separates words.
bool is_word_char(char c) noexcept;

/// Alternating maximal runs of word and separator characters.
std::vector<Token> tokenize(std::string_view text);

inline constexpr std::size_t kMinWordLength = 3;
inline constexpr std::size_t kMinOccurrences = 2;

class Dictionary {
public:
    struct Entry {
        std::string word;
        std::size_t count = 0; // 0 when the dictionary was decoded rather than built
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Dictionary() = default;
    explicit Dictionary(std::vector<Entry> entries);

    static Dictionary from_words(std::vector<std::string> words);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Key width: max(1, ceil(log2(size))).
    unsigned key_bits() const noexcept;

    std::optional<std::size_t> find(std::string_view word) const;
    const std::string& word(std::size_t key) const { return entries_.at(key).word; }
    std::size_t total_chars() const noexcept;

    friend bool operator==(const Dictionary& a, const Dictionary& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct DictionaryOptions {
    /// Drop words whose dictionary entry costs more bits than their
    /// references save across the corpus.
    bool gain_filter = false;
};

/// Case-sensitive word counts over the corpus; keeps words seen at least
/// twice with at least three characters, ordered by descending count and
/// then by first appearance.
Dictionary build_dictionary(const std::vector<std::string>& corpus, DictionaryOptions options = {});

struct Constant {
    std::string text;
    friend bool operator==(const Constant&, const Constant&) = default;
};

struct DictRef {
    std::size_t key = 0;
    friend bool operator==(const DictRef&, const DictRef&) = default;
};

using Segment = std::variant<Constant, DictRef>;

enum class Coding : unsigned { Ascii7 = 0b00, Utf8 = 0b01 };

/// ASCII-7 when every byte is below 0x80, UTF-8 otherwise.
Coding choose_coding(std::string_view text) noexcept;
unsigned char_bits(Coding coding) noexcept;

struct SegmentedString {
    Coding coding = Coding::Ascii7;
    std::vector<Segment> segments;
    friend bool operator==(const SegmentedString&, const SegmentedString&) = default;
};

/// Whole word tokens found in the dictionary become references; all other
/// runs merge into maximal constants.
SegmentedString segment(std::string_view text, const Dictionary& dict);

/// Inverse of segment(). Throws std::out_of_range for a key outside dict.
std::string reassemble(const SegmentedString& seg, const Dictionary& dict);

// Bit cost model of the string framing, shared by the gain filter and the
// compression report. The codec's encoders produce exactly these sizes.
std::size_t plain_string_bits(std::string_view text);
std::size_t compressed_string_bits(const SegmentedString& seg, const Dictionary& dict);
/// Whole DICT_LOCAL header command, including the command bits and word count.
std::size_t dictionary_bits(const Dictionary& dict);

} // namespace sqry
