#pragma once

// Compilation driver and size accounting.

#include "sqry/codec.hpp"
#include "sqry/ir.hpp"
#include "sqry/textcomp.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sqry {

struct CompileOptions {
    /// Falls back to plain strings when the dictionary would not shrink the
    /// payload.
    bool compress = true;
    DictionaryOptions dictionary;
};

struct CompileResult {
    EncodedPayload payload;
    /// Absent when compression is off or no word qualifies.
    std::optional<Dictionary> dictionary;
};

CompileResult compile(const Program& program, const CompileOptions& options = {});

/// Occupancy of the uncompressed and compressed encodings of one program.
struct CompilationReport {
    std::size_t total_bits = 0;
    std::size_t string_bits = 0;
    std::size_t dictionary_bits = 0;
    /// Compressed strings including the dictionary.
    std::size_t compressed_string_bits = 0;
    std::size_t compressed_total_bits = 0;
    std::size_t dictionary_words = 0;

    /// Share of the uncompressed whole, rounded to one decimal.
    static double percent(std::size_t part, std::size_t whole);
    double ratio_percent() const { return percent(compressed_total_bits, total_bits); }
};

CompilationReport make_report(const Program& program, const DictionaryOptions& options = {});

void print_table(std::ostream& out, const CompilationReport& report);
void print_key_values(std::ostream& out, const CompilationReport& report);

/// Per-word and per-string breakdown behind the `stats` command.
struct CompressionReport {
    struct StringRow {
        std::string text;
        std::size_t plain_bits = 0;
        std::size_t compressed_bits = 0;
    };
    Dictionary dictionary;
    std::size_t dictionary_bits = 0;
    std::vector<StringRow> strings;
    std::size_t plain_total = 0;
    std::size_t compressed_total = 0; // strings only, dictionary excluded
};

CompressionReport make_compression_report(const std::vector<std::string>& corpus,
                                          const DictionaryOptions& options = {});

void print_table(std::ostream& out, const CompressionReport& report);
void print_key_values(std::ostream& out, const CompressionReport& report);

} // namespace sqry
