#include "fixtures.hpp"
#include "generators.hpp"

#include "sqry/codec.hpp"
#include "sqry/error.hpp"
#include "sqry/frontend.hpp"
#include "sqry/packaging.hpp"
#include "sqry/report.hpp"

#include <doctest.h>

#include <random>

using namespace sqry;

namespace {

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out)
        b = static_cast<std::uint8_t>(rng());
    return out;
}

} // namespace

TEST_CASE("pack pads to whole bytes") {
    BitBuffer bits = BitBuffer::from_string("000100000");
    auto bytes = pack(bits);
    CHECK(bytes == std::vector<std::uint8_t>{0x10, 0x00});
    CHECK(unpack(bytes, 9) == bits);
}

TEST_CASE("pack enforces the budget") {
    BitBuffer max_bits;
    for (std::size_t i = 0; i < kQrMaxBytes * 8; ++i)
        max_bits.push_back(i % 3 == 0);
    CHECK(pack(max_bits).size() == kQrMaxBytes);

    BitBuffer over = max_bits;
    over.push_back(true);
    CHECK_THROWS_AS(pack(over), CapacityExceeded);

    BitBuffer huge;
    for (std::size_t i = 0; i < 23625; ++i)
        huge.push_back(false);
    try {
        pack(huge);
        FAIL("no error");
    } catch (const CapacityExceeded& e) {
        CHECK(e.bits() == 23625);
        CHECK(e.budget_bytes() == kQrMaxBytes);
    }
    CHECK_THROWS_AS(pack(BitBuffer::from_string("1 0000000 0"), QrBudget{1}), CapacityExceeded);
}

TEST_CASE("pack and unpack round trip") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        BitBuffer bits;
        const std::size_t n = rng() % 4000;
        for (std::size_t j = 0; j < n; ++j)
            bits.push_back(rng() & 1);
        REQUIRE(unpack(pack(bits), n) == bits);
    }
}

TEST_CASE("access point payload fits one symbol") {
    Program p = sqry::testing::wifi_program();
    CHECK(pack(compile(p).payload).size() < kQrMaxBytes);
    CHECK(pack(compile(p, {false, {}}).payload).size() < kQrMaxBytes);
}

TEST_CASE("QR render and scan") {
    std::mt19937_64 rng(8);
    for (std::size_t n : {std::size_t{1}, std::size_t{100}, std::size_t{891}, kQrMaxBytes}) {
        INFO(n);
        auto bytes = random_bytes(rng, n);
        GrayImage img = render_qr(bytes);
        CHECK(img.width == img.height);
        CHECK(scan_qr(img) == bytes);
    }
}

TEST_CASE("QR levels and capacities") {
    std::mt19937_64 rng(9);
    auto bytes = random_bytes(rng, 1273);
    for (EcLevel level : {EcLevel::Low, EcLevel::Medium, EcLevel::Quartile, EcLevel::High})
        CHECK(scan_qr(render_qr(bytes, QrOptions{level, 2, 4})) == bytes);
    CHECK_THROWS_AS(render_qr(random_bytes(rng, 1274), QrOptions{EcLevel::High}), CapacityExceeded);
    CHECK_THROWS_AS(render_qr(random_bytes(rng, 2954)), CapacityExceeded);
}

TEST_CASE("QR errors") {
    std::vector<std::uint8_t> none;
    CHECK_THROWS_AS(render_qr(none), QrError);
    GrayImage blank{64, 64, std::vector<std::uint8_t>(64 * 64, 255)};
    CHECK_THROWS_AS(scan_qr(blank), QrError);
    CHECK_THROWS_AS(scan_qr(GrayImage{10, 10, {}}), QrError);
}

TEST_CASE("PNG files") {
    auto dir = sqry::testing::scratch_dir("packaging");
    std::vector<std::uint8_t> bytes = {0x10, 0x00, 0xff, 0x03};
    emit_qr(bytes, dir / "a.png", QrOptions{EcLevel::Medium, 3, 4});
    GrayImage img = read_png(dir / "a.png");
    CHECK(img.width > 0);
    CHECK(read_qr(dir / "a.png") == bytes);
    CHECK_THROWS(read_png(dir / "missing.png"));
}

TEST_CASE("generated programs survive the whole chain") {
    sqry::testing::Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        Program p = sqry::testing::random_program(rng);
        std::vector<std::uint8_t> bytes = pack(compile(p).payload);
        REQUIRE(parse(format(decode_program_bytes(scan_qr(render_qr(bytes))).program)) == p);
    }
}
