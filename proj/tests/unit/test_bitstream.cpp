#include "sqry/bitstream.hpp"
#include "sqry/error.hpp"

#include <doctest.h>

#include <random>

using namespace sqry;

TEST_CASE("packing is MSB first with zero padding") {
    BitBuffer b = BitBuffer::from_string("1010 0000 1");
    CHECK(b.size() == 9);
    REQUIRE(b.bytes().size() == 2);
    CHECK(b.bytes()[0] == 0xA0);
    CHECK(b.bytes()[1] == 0x80);
    CHECK(b.to_string() == "101000001");
}

TEST_CASE("write takes the low bits") {
    BitBuffer b;
    b.write(0x3, 7);
    b.write(0xFF, 2);
    b.write(0, 0);
    CHECK(b.to_string() == "000001111");
    BitBuffer wide;
    wide.write(~std::uint64_t{0}, 64);
    CHECK(wide.to_string() == std::string(64, '1'));
}

TEST_CASE("from_bytes masks bits beyond the count") {
    const std::uint8_t raw[] = {0xFF, 0xFF};
    BitBuffer b = BitBuffer::from_bytes(raw, 10);
    CHECK(b.to_string() == "1111111111");
    CHECK(b.bytes()[1] == 0xC0);
    CHECK(b == BitBuffer::from_string("1111111111"));
}

TEST_CASE("append") {
    BitBuffer a = BitBuffer::from_string("101");
    a.append(BitBuffer::from_string("0011 1"));
    CHECK(a.to_string() == "10100111");
}

TEST_CASE("reader") {
    BitBuffer b = BitBuffer::from_string("1 0110 111");
    BitReader r(b);
    CHECK(r.read_bit());
    CHECK(r.read(4) == 0b0110);
    CHECK(r.position() == 5);
    CHECK(r.remaining() == 3);
    BitReader peek = r;
    CHECK(peek.read(3) == 0b111);
    CHECK(r.position() == 5);
    CHECK(r.read(3) == 7);
    CHECK(r.at_end());
    CHECK_THROWS_AS(r.read_bit(), DecodeError);
    BitReader short_read(b);
    CHECK_THROWS_AS(short_read.read(10), DecodeError);
}

TEST_CASE("random write/read round trip") {
    std::mt19937_64 rng(1);
    BitBuffer b;
    std::vector<std::pair<std::uint64_t, unsigned>> items;
    for (int i = 0; i < 2000; ++i) {
        unsigned w = static_cast<unsigned>(rng() % 65);
        std::uint64_t v = w == 64 ? rng() : rng() & ((std::uint64_t{1} << w) - 1);
        items.emplace_back(v, w);
        b.write(v, w);
    }
    BitReader r(b);
    for (auto [v, w] : items)
        REQUIRE(r.read(w) == v);
    CHECK(r.at_end());
    CHECK(BitBuffer::from_bytes(b.bytes(), b.size()) == b);
}
