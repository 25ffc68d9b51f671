#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqry {

/// Append-only bit sequence. Bits are packed most-significant-first within
/// each byte; the final byte is zero-padded on the right.
class BitBuffer {
public:
    BitBuffer() = default;

    /// Parses a string of '0'/'1' characters; spaces are ignored.
    static BitBuffer from_string(std::string_view bits);
    static BitBuffer from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);
    static BitBuffer from_bytes(std::span<const std::uint8_t> bytes) {
        return from_bytes(bytes, bytes.size() * 8);
    }

    void push_back(bool bit);
    /// Appends the low `width` bits of value, most significant first.
    void write(std::uint64_t value, unsigned width);
    void append(const BitBuffer& other);

    bool operator[](std::size_t i) const { return (bytes_[i / 8] >> (7 - i % 8)) & 1u; }
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::string to_string() const;

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

/// Cursor over a bit sequence. Reads past the end throw DecodeError.
class BitReader {
public:
    explicit BitReader(const BitBuffer& buffer) : buffer_(&buffer) {}

    bool read_bit();
    std::uint64_t read(unsigned width);

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return buffer_->size() - pos_; }
    bool at_end() const noexcept { return pos_ == buffer_->size(); }

private:
    const BitBuffer* buffer_;
    std::size_t pos_ = 0;
};

} // namespace sqry
