#include "sqry/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

namespace sqry {

CompileResult compile(const Program& program, const CompileOptions& options) {
    std::optional<Dictionary> dict;
    if (options.compress) {
        Dictionary built = build_dictionary(program.strings(), options.dictionary);
        if (!built.empty())
            dict = std::move(built);
    }
    EncodedPayload payload = encode_program(program, dict);
    if (dict) {
        EncodedPayload plain = encode_program(program);
        if (plain.total_bits() <= payload.total_bits())
            return CompileResult{std::move(plain), std::nullopt};
    }
    return CompileResult{std::move(payload), std::move(dict)};
}

double CompilationReport::percent(std::size_t part, std::size_t whole) {
    if (whole == 0)
        return 0.0;
    return std::round(1000.0 * static_cast<double>(part) / static_cast<double>(whole)) / 10.0;
}

CompilationReport make_report(const Program& program, const DictionaryOptions& options) {
    const CompileResult plain = compile(program, {false, options});
    const CompileResult packed = compile(program, {true, options});
    CompilationReport r;
    r.total_bits = plain.payload.total_bits();
    r.string_bits = plain.payload.string_bits;
    r.dictionary_bits = packed.payload.dictionary_bits;
    r.compressed_string_bits = packed.payload.string_bits + packed.payload.dictionary_bits;
    r.compressed_total_bits = packed.payload.total_bits();
    r.dictionary_words = packed.dictionary ? packed.dictionary->size() : 0;
    return r;
}

namespace {

std::string fixed1(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", value);
    return buf;
}

std::string pct(double value) { return fixed1(value) + "%"; }

void row(std::ostream& out, const std::string& subject, const std::string& occupancy) {
    out << std::left << std::setw(44) << subject << occupancy << '\n';
}

} // namespace

void print_table(std::ostream& out, const CompilationReport& r) {
    auto bits = [](std::size_t n) { return std::to_string(n) + " bits"; };
    auto share = [&](std::size_t n) {
        return bits(n) + " (" + pct(CompilationReport::percent(n, r.total_bits)) + ")";
    };
    row(out, "Subject", "Occupancy");
    row(out, "Whole QR code", share(r.total_bits));
    row(out, "Strings", share(r.string_bits));
    row(out, "Dictionary", bits(r.dictionary_bits) + " (" + std::to_string(r.dictionary_words) + " words)");
    row(out, "Compressed strings (including dictionary)", share(r.compressed_string_bits));
    row(out, "Whole QR code (with compressed strings)", share(r.compressed_total_bits));
}

void print_key_values(std::ostream& out, const CompilationReport& r) {
    out << "total_bits=" << r.total_bits << '\n'
        << "string_bits=" << r.string_bits << '\n'
        << "dictionary_words=" << r.dictionary_words << '\n'
        << "dictionary_bits=" << r.dictionary_bits << '\n'
        << "compressed_string_bits=" << r.compressed_string_bits << '\n'
        << "compressed_total_bits=" << r.compressed_total_bits << '\n'
        << "ratio_percent=" << fixed1(r.ratio_percent()) << '\n';
}

CompressionReport make_compression_report(const std::vector<std::string>& corpus, const DictionaryOptions& options) {
    CompressionReport r;
    r.dictionary = build_dictionary(corpus, options);
    r.dictionary_bits = r.dictionary.empty() ? 0 : dictionary_bits(r.dictionary);
    for (const auto& s : corpus) {
        CompressionReport::StringRow row{s, plain_string_bits(s), plain_string_bits(s)};
        if (!r.dictionary.empty())
            row.compressed_bits = compressed_string_bits(segment(s, r.dictionary), r.dictionary);
        r.plain_total += row.plain_bits;
        r.compressed_total += row.compressed_bits;
        r.strings.push_back(std::move(row));
    }
    return r;
}

void print_table(std::ostream& out, const CompressionReport& r) {
    out << "Dictionary: " << r.dictionary.size() << " words, " << r.dictionary.total_chars() << " characters, "
        << r.dictionary_bits << " bits, key width " << (r.dictionary.empty() ? 0 : r.dictionary.key_bits())
        << " bits\n";
    out << std::right << std::setw(5) << "key" << std::setw(7) << "count" << "  word\n";
    for (std::size_t i = 0; i < r.dictionary.size(); ++i) {
        const auto& e = r.dictionary.entries()[i];
        out << std::setw(5) << i << std::setw(7) << e.count << "  " << e.word << '\n';
    }
    out << '\n' << std::setw(7) << "plain" << std::setw(7) << "comp" << "  string\n";
    for (const auto& s : r.strings)
        out << std::setw(7) << s.plain_bits << std::setw(7) << s.compressed_bits << "  \"" << s.text << "\"\n";
    out << '\n'
        << "Strings: " << r.strings.size() << ", plain " << r.plain_total << " bits, compressed "
        << r.compressed_total << " bits + dictionary " << r.dictionary_bits << " bits = "
        << r.compressed_total + r.dictionary_bits << " bits\n";
}

void print_key_values(std::ostream& out, const CompressionReport& r) {
    for (std::size_t i = 0; i < r.dictionary.size(); ++i) {
        const auto& e = r.dictionary.entries()[i];
        out << "word." << i << '=' << e.word << '\n' << "word." << i << ".count=" << e.count << '\n';
    }
    out << "dictionary_words=" << r.dictionary.size() << '\n'
        << "dictionary_chars=" << r.dictionary.total_chars() << '\n'
        << "dictionary_bits=" << r.dictionary_bits << '\n';
    for (std::size_t i = 0; i < r.strings.size(); ++i)
        out << "string." << i << ".plain_bits=" << r.strings[i].plain_bits << '\n'
            << "string." << i << ".compressed_bits=" << r.strings[i].compressed_bits << '\n';
    out << "strings=" << r.strings.size() << '\n'
        << "plain_total_bits=" << r.plain_total << '\n'
        << "compressed_total_bits=" << r.compressed_total << '\n'
        << "compressed_with_dictionary_bits=" << r.compressed_total + r.dictionary_bits << '\n';
}

} // namespace sqry
