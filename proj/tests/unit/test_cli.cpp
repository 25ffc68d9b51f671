#include "fixtures.hpp"

#include "cli.hpp"
#include "sqry/codec.hpp"
#include "sqry/frontend.hpp"
#include "sqry/interchange.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace sqry;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    f << text;
}

fs::path scratch() { return sqry::testing::scratch_dir("cli"); }

std::string wifi() { return sqry::testing::wifi_source_path().string(); }

fs::path compiled_wifi() {
    fs::path out = scratch() / "wifi.bin";
    REQUIRE(run({"compile", wifi(), "-o", out.string()}).code == cli::kOk);
    return out;
}

} // namespace

TEST_CASE("compile with stats") {
    fs::path out = scratch() / "stats.bin";
    Result r = run({"compile", wifi(), "-o", out.string(), "--stats"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("string_bits=6524") != std::string::npos);
    CHECK(r.out.find("Compressed strings (including dictionary)") != std::string::npos);
    CHECK(fs::file_size(out) < 2953);
}

TEST_CASE("compile without compression is larger") {
    fs::path a = scratch() / "c.bin";
    fs::path b = scratch() / "p.bin";
    REQUIRE(run({"compile", wifi(), "-o", a.string()}).code == 0);
    REQUIRE(run({"compile", wifi(), "-o", b.string(), "--no-compress"}).code == 0);
    CHECK(fs::file_size(a) < fs::file_size(b));
}

TEST_CASE("decompile prints canonical source") {
    Result r = run({"decompile", compiled_wifi().string()});
    CHECK(r.code == 0);
    CHECK(parse(r.out) == sqry::testing::wifi_program());
}

TEST_CASE("run with scripted answers") {
    fs::path bin = compiled_wifi();
    Result r = run({"run", bin.string()}, "1\n1\n2\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("Operating standalone mode\n") != std::string::npos);
    CHECK(r.out.find("  1) Check status\n") != std::string::npos);

    Result seven = run({"run", bin.string()}, "3\n1\n9601\n");
    CHECK(seven.code == 0);
    CHECK(seven.out.find("802.11be (Wi-Fi 7)\n") != std::string::npos);

    Result by_text = run({"run", bin.string()}, "Configuration\nIP\n");
    CHECK(by_text.code == 0);
    CHECK(by_text.out.find("192.168.4.2\n") != std::string::npos);
}

TEST_CASE("run re-prompts on bad input") {
    fs::path bin = compiled_wifi();
    Result r = run({"run", bin.string()}, "7\nnope\n2\n3\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("Please choose 1-3.") != std::string::npos);
    CHECK(r.out.find("192.168.4.2") != std::string::npos);

    Result n = run({"run", bin.string()}, "3\n1\nfast\n100\n");
    CHECK(n.code == 0);
    CHECK(n.out.find("Please enter an integer.") != std::string::npos);
    CHECK(n.out.find("802.11n (Wi-Fi 4)") != std::string::npos);
}

TEST_CASE("run fails when input ends early") {
    Result r = run({"run", compiled_wifi().string()}, "1\n");
    CHECK(r.code == cli::kSessionFailed);
    CHECK(r.err.find("input ended") != std::string::npos);
}

TEST_CASE("run fails on a numeric question without a matching branch") {
    fs::path src = scratch() / "nofallback.sqry";
    fs::path bin = scratch() / "nofallback.bin";
    write(src, "inputs \"n\"\nifc > 5:\n   print \"big\" exit\n");
    REQUIRE(run({"compile", src.string(), "-o", bin.string()}).code == 0);
    Result r = run({"run", bin.string()}, "5\n");
    CHECK(r.code == cli::kSessionFailed);
    CHECK(r.err.find("no matching branch") != std::string::npos);
}

TEST_CASE("export") {
    fs::path json_path = scratch() / "wifi.json";
    REQUIRE(run({"export", compiled_wifi().string(), "-o", json_path.string()}).code == 0);
    auto doc = nlohmann::json::parse(sqry::testing::read_file(json_path));
    CHECK(doc["format"] == "sqry-tree");
    CHECK(from_interchange(doc) == sqry::testing::wifi_program());
}

TEST_CASE("qr and scan") {
    fs::path bin = compiled_wifi();
    fs::path png = scratch() / "wifi.png";
    fs::path back = scratch() / "wifi_back.bin";
    REQUIRE(run({"qr", bin.string(), "-o", png.string(), "--ec", "M", "--scale", "2"}).code == 0);
    REQUIRE(run({"scan", png.string(), "-o", back.string()}).code == 0);
    CHECK(sqry::testing::read_file(back) == sqry::testing::read_file(bin));
}

TEST_CASE("stats") {
    Result r = run({"stats", wifi()});
    CHECK(r.code == 0);
    CHECK(r.out.find("dictionary_words=21") != std::string::npos);
    CHECK(r.out.find("plain_total_bits=6524") != std::string::npos);
    Result g = run({"stats", wifi(), "--gain-filter"});
    CHECK(g.code == 0);
}

TEST_CASE("error exit codes") {
    fs::path empty = scratch() / "empty.sqry";
    write(empty, "");
    Result parse_err = run({"compile", empty.string(), "-o", (scratch() / "x.bin").string()});
    CHECK(parse_err.code == cli::kParseOrDecode);
    CHECK(parse_err.err.find("line 1: empty program") != std::string::npos);

    fs::path corrupt = scratch() / "corrupt.bin";
    write(corrupt, std::string("\xf0\x00", 2));
    CHECK(run({"run", corrupt.string()}).code == cli::kParseOrDecode);
    CHECK(run({"decompile", corrupt.string()}).code == cli::kParseOrDecode);
    CHECK(run({"qr", corrupt.string(), "-o", (scratch() / "c.png").string()}).code == cli::kParseOrDecode);

    fs::path blank = scratch() / "blank.png";
    REQUIRE(run({"qr", compiled_wifi().string(), "-o", blank.string()}).code == 0);
    write(blank, "not a png");
    CHECK(run({"scan", blank.string(), "-o", (scratch() / "b.bin").string()}).code != 0);

    CHECK(run({"decompile", (scratch() / "missing.bin").string()}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"qr", compiled_wifi().string(), "-o", "x.png", "--ec", "Z"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("capacity exit code") {
    fs::path src = scratch() / "big.sqry";
    std::string text;
    for (int i = 0; i < 400; ++i)
        text += "print \"" + std::string(60, static_cast<char>('A' + i % 26)) + std::to_string(i) + "\"\n";
    text += "exit\n";
    write(src, text);
    Result r = run({"compile", src.string(), "-o", (scratch() / "big.bin").string()});
    CHECK(r.code == cli::kCapacity);
    CHECK(r.err.find("capacity exceeded") != std::string::npos);
}

TEST_CASE("end to end chain") {
    fs::path bin = compiled_wifi();
    fs::path png = scratch() / "chain.png";
    fs::path scanned = scratch() / "chain.bin";
    REQUIRE(run({"qr", bin.string(), "-o", png.string()}).code == 0);
    REQUIRE(run({"scan", png.string(), "-o", scanned.string()}).code == 0);
    Result r = run({"run", scanned.string()}, "Configuration\n1\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("User: admin\nPassword: 1234\n") != std::string::npos);
}

TEST_CASE("exit-only program") {
    fs::path src = scratch() / "exit.sqry";
    fs::path bin = scratch() / "exit.bin";
    fs::path doc = scratch() / "exit.json";
    write(src, "exit\n");
    REQUIRE(run({"compile", src.string(), "-o", bin.string()}).code == 0);
    CHECK(fs::file_size(bin) == 2);
    CHECK(run({"decompile", bin.string()}).out == "exit\n");
    REQUIRE(run({"export", bin.string(), "-o", doc.string()}).code == 0);
    CHECK(nlohmann::json::parse(sqry::testing::read_file(doc)) ==
          nlohmann::json{{"format", "sqry-tree"}, {"version", 1}, {"root", {{"kind", "exit"}}}});
    CHECK(run({"run", bin.string()}).code == 0);
    CHECK(run({"export", (scratch() / "missing.bin").string(), "-o", doc.string()}).code == cli::kUsage);
}

TEST_CASE("source to QR and back to source") {
    fs::path bin = compiled_wifi();
    fs::path png = scratch() / "roundtrip.png";
    fs::path scanned = scratch() / "roundtrip.bin";
    REQUIRE(run({"qr", bin.string(), "-o", png.string()}).code == 0);
    REQUIRE(run({"scan", png.string(), "-o", scanned.string()}).code == 0);
    Result r = run({"decompile", scanned.string()});
    REQUIRE(r.code == 0);
    CHECK(parse(r.out) == sqry::testing::wifi_program());
}
