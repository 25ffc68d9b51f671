// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/codec.hpp"
#include "sqry/error.hpp"
#include "sqry/frontend.hpp"
#include "sqry/packaging.hpp"
#include "sqry/report.hpp"
#include "sqry/vm.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace sqry;
namespace t = sqry::testing;

namespace {

// Tolerances.
constexpr std::size_t kExamplePlainBits = 629;
constexpr std::size_t kExampleCompressedBits = 535;
constexpr std::size_t kExampleCompressedLimit = 574;
constexpr double kExpRoundTripSeconds = 10.0;
constexpr std::int64_t kExpRange = 1'000'000;
constexpr std::size_t kWifiStringCount = 56;
constexpr std::size_t kWifiStringChars = 860;
constexpr std::size_t kWifiPlainBits = 6524;
constexpr std::size_t kWifiDictWords = 20;
constexpr std::size_t kWifiDictWordsTolerance = 1;
constexpr std::size_t kWifiDictBits = 950;
constexpr std::size_t kWifiDictBitsTolerance = 45;
constexpr double kWifiCompressedBits = 5907.0;
constexpr double kWifiCompressedTolerance = 0.02;
constexpr double kWholeRatioLimit = 0.95;
constexpr int kRoundTripCases = 1000;
constexpr double kRoundTripSeconds = 60.0;
constexpr std::size_t kQrBytes = 2953;

int failures = 0;

void report(const char* name, bool pass, const std::string& detail) {
    std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

// Exceptions inside a check count as a failure of that criterion.
void criterion(const char* name, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
    }
    report(name, pass, detail.str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const Dictionary& example_dictionary() {
    static const Dictionary d = build_dictionary(t::example_strings());
    return d;
}

// Leaf paths with the prints seen along each, computed from the tree.
struct LeafPath {
    nlohmann::json answers = nlohmann::json::array();
    std::vector<std::string> output;
};

void enumerate(const Node& node, LeafPath path, std::vector<LeafPath>& out) {
    std::visit(Overloaded{
                   [&](const Exit&) { out.push_back(path); },
                   [&](const Print& p) {
                       path.output.push_back(p.text);
                       enumerate(*p.next, path, out);
                   },
                   [&](const Ask& a) {
                       for (const auto& b : a.branches) {
                           LeafPath next = path;
                           next.answers.push_back(b.match);
                           enumerate(*b.child, next, out);
                       }
                   },
                   [&](const AskNumeric& a) {
                       for (const auto& th : a.thresholds) {
                           LeafPath next = path;
                           next.answers.push_back(th.limit + 1);
                           enumerate(*th.child, next, out);
                       }
                       if (a.otherwise) {
                           LeafPath next = path;
                           next.answers.push_back(a.thresholds.back().limit);
                           enumerate(**a.otherwise, next, out);
                       }
                   },
               },
               node.value);
}

vm::Session play(vm::Session s, const nlohmann::json& answers) {
    for (const auto& a : answers)
        s = a.is_number_integer() ? s.answer_number(a.get<std::int64_t>()) : s.answer_choice(a.get<std::string>());
    return s;
}

std::size_t count_prints(const Node& node) {
    return std::visit(Overloaded{
                          [](const Exit&) -> std::size_t { return 0; },
                          [](const Print& p) -> std::size_t { return 1 + count_prints(*p.next); },
                          [](const Ask& a) -> std::size_t {
                              std::size_t n = 0;
                              for (const auto& b : a.branches)
                                  n += count_prints(*b.child);
                              return n;
                          },
                          [](const AskNumeric& a) -> std::size_t {
                              std::size_t n = a.otherwise ? count_prints(**a.otherwise) : 0;
                              for (const auto& th : a.thresholds)
                                  n += count_prints(*th.child);
                              return n;
                          },
                      },
                      node.value);
}

} // namespace

int main() {
    const Program wifi = t::wifi_program();
    const auto golden = t::golden_vectors();

    criterion("three-string example, plain size", [&](std::ostringstream& d) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            BitBuffer b;
            write_plain_string(b, t::example_strings()[i]);
            d << (i ? " + " : "") << b.size();
            total += b.size();
        }
        d << " = " << total << " bits (expected " << kExamplePlainBits << ")";
        return total == kExamplePlainBits;
    });

    criterion("three-string example, dictionary", [&](std::ostringstream& d) {
        const Dictionary& dict = example_dictionary();
        std::vector<Dictionary::Entry> expected = {{"Wi-Fi", 3}, {"activity", 3}, {"detected", 2}};
        for (const auto& e : dict.entries())
            d << "(" << e.word << "," << e.count << ") ";
        d << "n_bits=" << dict.key_bits();
        return dict.entries() == expected && dict.key_bits() == 2;
    });

    criterion("three-string example, compressed size", [&](std::ostringstream& d) {
        const Dictionary& dict = example_dictionary();
        BitBuffer header;
        write_dictionary(header, dict);
        bool oracle = header.to_string() == golden.at("dict_example");
        std::size_t total = header.size();
        d << "dictionary " << header.size();
        for (std::size_t i = 0; i < 3; ++i) {
            BitBuffer b;
            write_compressed_string(b, segment(t::example_strings()[i], dict), dict);
            oracle = oracle && b.to_string() == golden.at("compressed_example_" + std::to_string(i));
            d << " + " << b.size();
            total += b.size();
        }
        d << " = " << total << " bits (locked " << kExampleCompressedBits << ", limit " << kExampleCompressedLimit
          << ", plain " << kExamplePlainBits << "), oracle " << (oracle ? "match" : "MISMATCH");
        return oracle && total == kExampleCompressedBits && total <= kExampleCompressedLimit && total < kExamplePlainBits;
    });

    criterion("exponential integer coding", [&](std::ostringstream& d) {
        const std::string three = encode_exp_int(3).to_string();
        const std::size_t twenty = encode_exp_int(20).size();
        const auto start = std::chrono::steady_clock::now();
        BitBuffer buf;
        for (std::int64_t n = -kExpRange; n <= kExpRange; ++n)
            write_exp_int(buf, n);
        BitReader in(buf);
        std::size_t bad = 0;
        for (std::int64_t n = -kExpRange; n <= kExpRange; ++n)
            bad += read_exp_int(in) != n;
        const double secs = seconds_since(start);
        d << "exp(3)=" << three << ", |exp(20)|=" << twenty << " bits, round trip of " << 2 * kExpRange + 1
          << " values: " << bad << " failures in " << secs << " s (limit " << kExpRoundTripSeconds << " s)";
        return three == "0011" && twenty == 8 && bad == 0 && in.at_end() && secs < kExpRoundTripSeconds;
    });

    criterion("access point program, plain strings", [&](std::ostringstream& d) {
        std::size_t chars = 0;
        for (const auto& s : wifi.strings())
            chars += s.size();
        const EncodedPayload plain = encode_program(wifi);
        d << wifi.strings().size() << " strings, " << chars << " characters, " << plain.string_bits
          << " bits (expected " << kWifiPlainBits << ")";
        return wifi.strings().size() == kWifiStringCount && chars == kWifiStringChars &&
               plain.string_bits == kWifiPlainBits;
    });

    criterion("access point program, dictionary", [&](std::ostringstream& d) {
        const Dictionary dict = build_dictionary(wifi.strings());
        const std::size_t bits = dictionary_bits(dict);
        d << dict.size() << " words (" << kWifiDictWords << " +/- " << kWifiDictWordsTolerance << "), " << bits
          << " bits (" << kWifiDictBits << " +/- " << kWifiDictBitsTolerance << ")";
        const auto within = [](std::size_t v, std::size_t target, std::size_t tol) {
            return v + tol >= target && v <= target + tol;
        };
        return within(dict.size(), kWifiDictWords, kWifiDictWordsTolerance) &&
               within(bits, kWifiDictBits, kWifiDictBitsTolerance);
    });

    criterion("access point program, compressed strings", [&](std::ostringstream& d) {
        const CompilationReport r = make_report(wifi);
        const CompileResult on = compile(wifi);
        const CompileResult off = compile(wifi, {false, {}});
        const double limit = kWifiCompressedBits * (1.0 + kWifiCompressedTolerance);

        std::ostringstream kv;
        print_key_values(kv, r);
        const std::string text = kv.str();
        const auto has = [&](const std::string& key, std::size_t v) {
            return text.find(key + "=" + std::to_string(v) + "\n") != std::string::npos;
        };
        const bool consistent =
            on.dictionary && r.total_bits == off.payload.total_bits() && r.string_bits == off.payload.string_bits &&
            r.dictionary_bits == on.payload.dictionary_bits && r.dictionary_words == on.dictionary->size() &&
            r.compressed_string_bits == on.payload.string_bits + on.payload.dictionary_bits &&
            r.compressed_total_bits == on.payload.total_bits() &&
            r.total_bits - r.string_bits == r.compressed_total_bits - r.compressed_string_bits &&
            has("total_bits", r.total_bits) && has("compressed_string_bits", r.compressed_string_bits) &&
            has("compressed_total_bits", r.compressed_total_bits) && has("dictionary_bits", r.dictionary_bits);
        const double ratio = static_cast<double>(r.compressed_total_bits) / static_cast<double>(r.total_bits);
        d << r.compressed_string_bits << " bits incl. dictionary (limit " << limit << ", plain " << kWifiPlainBits
          << "), report " << (consistent ? "consistent" : "INCONSISTENT") << ", whole " << r.compressed_total_bits
          << "/" << r.total_bits << " = " << ratio << " (limit " << kWholeRatioLimit << ")";
        return static_cast<double>(r.compressed_string_bits) <= limit && r.compressed_string_bits < kWifiPlainBits &&
               consistent && ratio <= kWholeRatioLimit;
    });

    criterion("round-trip properties", [&](std::ostringstream& d) {
        const auto start = std::chrono::steady_clock::now();
        t::Rng rng(20240601);
        std::size_t bad_text = 0, bad_int = 0, bad_plain = 0, bad_comp = 0, bad_prog = 0, bad_pack = 0, bad_qr = 0;
        const auto dir = t::scratch_dir("acceptance") / "qr";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        for (int i = 0; i < kRoundTripCases; ++i) {
            const Program p = t::random_program(rng);
            bad_text += !(parse(format(p)) == p);

            const std::int64_t n = t::random_int(rng);
            BitBuffer ib = encode_exp_int(n);
            BitReader ir(ib);
            bad_int += read_exp_int(ir) != n || !ir.at_end();

            const std::string s = t::random_text(rng, 12);
            BitBuffer pb;
            write_plain_string(pb, s);
            BitReader pr(pb);
            bad_plain += read_plain_string(pr) != s || !pr.at_end();

            std::optional<Dictionary> dict;
            if (Dictionary built = build_dictionary(p.strings()); !built.empty())
                dict = std::move(built);
            if (dict) {
                BitBuffer cb;
                write_compressed_string(cb, segment(s, *dict), *dict);
                BitReader cr(cb);
                bad_comp += read_compressed_string(cr, *dict) != s || !cr.at_end();
            } else {
                const Dictionary fallback = example_dictionary();
                BitBuffer cb;
                write_compressed_string(cb, segment(s, fallback), fallback);
                BitReader cr(cb);
                bad_comp += read_compressed_string(cr, fallback) != s || !cr.at_end();
            }

            const EncodedPayload e = encode_program(p, dict);
            bad_prog += !(decode_program(e.bits()).program == p);

            const std::vector<std::uint8_t> bytes = pack(e, QrBudget{std::size_t{1} << 30});
            bad_pack += !(unpack(bytes, e.total_bits()) == e.bits());

            if (bytes.size() <= kQrBytes) {
                const auto png = dir / ("case" + std::to_string(i) + ".png");
                emit_qr(bytes, png, QrOptions{EcLevel::Low, 2, 4});
                bad_qr += read_qr(png) != bytes;
            } else {
                ++bad_qr;
            }
        }
        std::filesystem::remove_all(dir);
        const double secs = seconds_since(start);
        const std::size_t total = bad_text + bad_int + bad_plain + bad_comp + bad_prog + bad_pack + bad_qr;
        d << kRoundTripCases << " cases each; failures: parse/format " << bad_text << ", integers " << bad_int
          << ", plain strings " << bad_plain << ", compressed strings " << bad_comp << ", programs " << bad_prog
          << ", pack " << bad_pack << ", qr " << bad_qr << "; " << secs << " s (limit " << kRoundTripSeconds << " s)";
        return total == 0 && secs < kRoundTripSeconds;
    });

    criterion("virtual machine behaviour", [&](std::ostringstream& d) {
        const vm::Session start = vm::Session::start(wifi);
        bool ok = true;

        std::vector<LeafPath> leaves;
        enumerate(wifi.root(), {}, leaves);
        std::size_t leaf_failures = 0;
        for (const auto& leaf : leaves) {
            const vm::Session end = play(start, leaf.answers);
            leaf_failures += !std::holds_alternative<vm::Finished>(end.state()) || end.output_log() != leaf.output;
        }

        const auto table = nlohmann::json::parse(t::read_file(t::source_dir() / "tests/golden/wifi_paths.json"));
        std::size_t table_failures = 0;
        std::set<std::string> printed;
        for (const auto& path : table["paths"]) {
            const vm::Session end = play(start, path["answers"]);
            table_failures += !std::holds_alternative<vm::Finished>(end.state()) ||
                              end.output_log() != path["output"].get<std::vector<std::string>>();
            for (const auto& s : end.output_log())
                printed.insert(s);
        }
        const std::size_t prints = count_prints(wifi.root());
        ok = leaf_failures == 0 && table_failures == 0 && table["paths"].size() == leaves.size() &&
             printed.size() == prints;
        d << leaves.size() << " leaf paths (" << leaf_failures << " failures), golden table " << table["paths"].size()
          << " paths (" << table_failures << " failures), " << printed.size() << "/" << prints
          << " print statements reached; boundaries:";

        const std::vector<std::pair<std::int64_t, std::string>> boundaries = {
            {9601, "802.11be (Wi-Fi 7)"}, {9600, "802.11ax (Wi-Fi 6)"}, {3500, "802.11ax (Wi-Fi 6)"},
            {601, "802.11ac (Wi-Fi 5)"},  {600, "802.11n (Wi-Fi 4)"},   {55, "802.11n (Wi-Fi 4)"},
            {54, "802.11g"},
        };
        for (const auto& [value, expected] : boundaries) {
            const vm::Session end =
                start.answer_choice("Generic information").answer_choice("Standard").answer_number(value);
            const std::string got = end.output_log().empty() ? std::string("<none>") : end.output_log().back();
            const bool hit = got == expected && std::holds_alternative<vm::Finished>(end.state());
            ok = ok && hit;
            d << " " << value << "->" << got;
            if (!hit)
                d << " [expected " << expected << "]";
        }
        return ok;
    });

    criterion("capacity", [&](std::ostringstream& d) {
        const std::size_t compressed = pack(compile(wifi).payload).size();
        const std::size_t plain = pack(compile(wifi, {false, {}}).payload).size();
        BitBuffer synthetic;
        for (std::size_t i = 0; i < (kQrBytes + 1) * 8; ++i)
            synthetic.push_back((i * 7) % 5 == 0);
        bool pack_rejected = false;
        try {
            pack(synthetic);
        } catch (const CapacityExceeded&) {
            pack_rejected = true;
        }
        bool qr_rejected = false;
        try {
            render_qr(synthetic.bytes());
        } catch (const CapacityExceeded&) {
            qr_rejected = true;
        }
        d << "compressed " << compressed << " bytes, plain " << plain << " bytes (limit < " << kQrBytes << "), "
          << synthetic.bytes().size() << "-byte payload " << (pack_rejected ? "rejected" : "ACCEPTED")
          << " by pack, " << (qr_rejected ? "rejected" : "ACCEPTED") << " by the QR writer";
        return compressed < kQrBytes && plain < kQrBytes && pack_rejected && qr_rejected;
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
