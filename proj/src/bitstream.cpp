#include "sqry/bitstream.hpp"

#include "sqry/error.hpp"

#include <stdexcept>

namespace sqry {

BitBuffer BitBuffer::from_string(std::string_view bits) {
    BitBuffer out;
    for (char c : bits) {
        if (c == '0' || c == '1')
            out.push_back(c == '1');
        else if (c != ' ')
            throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
    }
    return out;
}

BitBuffer BitBuffer::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8)
        throw std::invalid_argument("bit count exceeds byte length");
    BitBuffer out;
    out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
    out.size_ = bit_count;
    if (bit_count % 8 != 0)
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bit_count % 8));
    return out;
}

void BitBuffer::push_back(bool bit) {
    if (size_ % 8 == 0)
        bytes_.push_back(0);
    if (bit)
        bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
    ++size_;
}

void BitBuffer::write(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;)
        push_back((value >> i) & 1u);
}

void BitBuffer::append(const BitBuffer& other) {
    for (std::size_t i = 0; i < other.size(); ++i)
        push_back(other[i]);
}

std::string BitBuffer::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out.push_back((*this)[i] ? '1' : '0');
    return out;
}

bool BitReader::read_bit() {
    if (pos_ >= buffer_->size())
        throw DecodeError("unexpected end of bit stream at bit " + std::to_string(pos_));
    return (*buffer_)[pos_++];
}

std::uint64_t BitReader::read(unsigned width) {
    if (remaining() < width)
        throw DecodeError("unexpected end of bit stream at bit " + std::to_string(pos_));
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i)
        value = (value << 1) | static_cast<std::uint64_t>((*buffer_)[pos_++]);
    return value;
}

} // namespace sqry
