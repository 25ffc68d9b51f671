#include "cli.hpp"

#include "sqry/error.hpp"
#include "sqry/frontend.hpp"
#include "sqry/interchange.hpp"
#include "sqry/packaging.hpp"
#include "sqry/report.hpp"
#include "sqry/vm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace sqry::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot write " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f)
        throw IoError("cannot write " + path);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw IoError("cannot write " + path);
}

Program load_payload(const std::string& path) { return decode_program_bytes(read_bytes(path)).program; }

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

template <typename Int>
bool parse_int(const std::string& text, Int& value) {
    const std::string t = trim(text);
    if (t.empty())
        return false;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    return ec == std::errc{} && ptr == t.data() + t.size();
}

int run_session(const Program& program, std::istream& in, std::ostream& out, std::ostream& err) {
    vm::Session session = vm::Session::start(program);
    std::size_t printed = 0;
    auto flush_log = [&] {
        for (; printed < session.output_log().size(); ++printed)
            out << session.output_log()[printed] << '\n';
    };
    flush_log();

    std::string line;
    while (!session.done()) {
        if (const auto* choice = std::get_if<vm::AwaitingChoice>(&session.state())) {
            out << choice->prompt << '\n';
            for (std::size_t i = 0; i < choice->options.size(); ++i)
                out << "  " << i + 1 << ") " << choice->options[i] << '\n';
            out << "> " << std::flush;
            if (!std::getline(in, line)) {
                err << "error: input ended before the program finished\n";
                return kSessionFailed;
            }
            std::size_t index = 0;
            if (parse_int(line, index)) {
                if (index < 1 || index > choice->options.size()) {
                    out << "Please choose 1-" << choice->options.size() << ".\n";
                    continue;
                }
                session = session.answer_choice(choice->options[index - 1]);
            } else if (std::find(choice->options.begin(), choice->options.end(), trim(line)) !=
                       choice->options.end()) {
                session = session.answer_choice(line);
            } else {
                out << "Please choose 1-" << choice->options.size() << ".\n";
                continue;
            }
        } else {
            const auto& number = std::get<vm::AwaitingNumber>(session.state());
            out << number.prompt << '\n' << "> " << std::flush;
            if (!std::getline(in, line)) {
                err << "error: input ended before the program finished\n";
                return kSessionFailed;
            }
            std::int64_t value = 0;
            if (!parse_int(line, value)) {
                out << "Please enter an integer.\n";
                continue;
            }
            session = session.answer_number(value);
        }
        flush_log();
    }

    if (const auto* failed = std::get_if<vm::Failed>(&session.state())) {
        err << "error: " << failed->reason << '\n';
        return kSessionFailed;
    }
    return kOk;
}

EcLevel parse_ec_level(const std::string& s) {
    if (s == "L") return EcLevel::Low;
    if (s == "M") return EcLevel::Medium;
    if (s == "Q") return EcLevel::Quartile;
    return EcLevel::High;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compiler, packager and virtual machine for executable QR code decision trees", "sqry"};
    app.require_subcommand(1);

    std::string source, input, output;
    bool no_compress = false, stats = false, gain_filter = false;
    std::string ec = "L";
    int scale = 4;

    auto* compile_cmd = app.add_subcommand("compile", "Compile a source program into a binary payload");
    compile_cmd->add_option("source", source, "Source program")->required();
    compile_cmd->add_option("-o,--output", output, "Payload file")->required();
    compile_cmd->add_flag("--no-compress", no_compress, "Store strings without the word dictionary");
    compile_cmd->add_flag("--stats", stats, "Print the occupancy report");
    compile_cmd->add_flag("--gain-filter", gain_filter, "Drop dictionary words that do not pay for themselves");

    auto* decompile_cmd = app.add_subcommand("decompile", "Print the canonical source of a payload");
    decompile_cmd->add_option("payload", input, "Payload file")->required();

    auto* run_cmd = app.add_subcommand("run", "Execute a payload interactively");
    run_cmd->add_option("payload", input, "Payload file")->required();

    auto* export_cmd = app.add_subcommand("export", "Write the portable JSON document of a payload");
    export_cmd->add_option("payload", input, "Payload file")->required();
    export_cmd->add_option("-o,--output", output, "JSON file")->required();

    auto* qr_cmd = app.add_subcommand("qr", "Render a payload as a QR code PNG");
    qr_cmd->add_option("payload", input, "Payload file")->required();
    qr_cmd->add_option("-o,--output", output, "PNG file")->required();
    qr_cmd->add_option("--ec", ec, "Error-correction level")->check(CLI::IsMember({"L", "M", "Q", "H"}));
    qr_cmd->add_option("--scale", scale, "Pixels per module")->check(CLI::Range(1, 64));

    auto* scan_cmd = app.add_subcommand("scan", "Read the payload stored in a QR code PNG");
    scan_cmd->add_option("image", input, "PNG file")->required();
    scan_cmd->add_option("-o,--output", output, "Payload file")->required();

    auto* stats_cmd = app.add_subcommand("stats", "Print the string compression report of a source program");
    stats_cmd->add_option("source", source, "Source program")->required();
    stats_cmd->add_flag("--gain-filter", gain_filter, "Drop dictionary words that do not pay for themselves");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (compile_cmd->parsed()) {
            Program program = parse(read_text(source));
            CompileOptions opts{!no_compress, DictionaryOptions{gain_filter}};
            CompileResult result = compile(program, opts);
            if (stats) {
                CompilationReport report = make_report(program, opts.dictionary);
                print_table(out, report);
                out << '\n';
                print_key_values(out, report);
            }
            write_bytes(output, pack(result.payload));
            return kOk;
        }
        if (decompile_cmd->parsed()) {
            out << format(load_payload(input));
            return kOk;
        }
        if (run_cmd->parsed())
            return run_session(load_payload(input), in, out, err);
        if (export_cmd->parsed()) {
            write_text(output, to_interchange(load_payload(input)).dump(2) + "\n");
            return kOk;
        }
        if (qr_cmd->parsed()) {
            std::vector<std::uint8_t> bytes = read_bytes(input);
            decode_program_bytes(bytes);
            emit_qr(bytes, output, QrOptions{parse_ec_level(ec), scale, 4});
            return kOk;
        }
        if (scan_cmd->parsed()) {
            write_bytes(output, read_qr(input));
            return kOk;
        }
        if (stats_cmd->parsed()) {
            Program program = parse(read_text(source));
            CompressionReport report = make_compression_report(program.strings(), DictionaryOptions{gain_filter});
            print_table(out, report);
            out << '\n';
            print_key_values(out, report);
            return kOk;
        }
    } catch (const ParseError& e) {
        err << source << ":" << e.what() << '\n';
        return kParseOrDecode;
    } catch (const DecodeError& e) {
        err << "error: cannot decode payload: " << e.what() << '\n';
        return kParseOrDecode;
    } catch (const EncodeError& e) {
        err << "error: cannot encode program: " << e.what() << '\n';
        return kParseOrDecode;
    } catch (const InvalidProgram& e) {
        err << "error: invalid program: " << e.what() << '\n';
        return kParseOrDecode;
    } catch (const InterchangeError& e) {
        err << "error: cannot export: " << e.what() << '\n';
        return kParseOrDecode;
    } catch (const QrError& e) {
        err << "error: " << e.what() << '\n';
        return kParseOrDecode;
    } catch (const CapacityExceeded& e) {
        err << "error: capacity exceeded: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace sqry::cli
