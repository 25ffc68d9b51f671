#pragma once

// Bit-exact binary format of a compiled program. See docs/format.md.
//
//   payload   := version:4 header-command* END_HEADER:3 node
//   DICT_LOCAL := 101 000 exp(count) plain-string{count}
//   node      := 00                                         exit
//              | 01 string node                             print
//              | 10 string exp(n) (string node){n}          ask
//              | 11 string exp(n) (exp node){n} bit [node]  ask numeric

#include "sqry/bitstream.hpp"
#include "sqry/ir.hpp"
#include "sqry/textcomp.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sqry {

inline constexpr unsigned kFormatVersion = 0b0001;
inline constexpr unsigned kVersionBits = 4;
inline constexpr unsigned kCommandBits = 3;
inline constexpr unsigned kCmdEndHeader = 0b000;
inline constexpr unsigned kCmdDictLocal = 0b101;
inline constexpr unsigned kDictLocalTrailer = 0b000;
inline constexpr unsigned kTagBits = 2;

enum class NodeTag : unsigned { Exit = 0b00, Print = 0b01, Ask = 0b10, AskNumeric = 0b11 };

inline constexpr unsigned char kNul = 0x00;
inline constexpr unsigned char kEtx = 0x03;

// Exponential coding of signed integers: 4-bit groups of one continuation
// bit (1 = another group follows) and three payload bits. The payload of
// k groups is a sign bit followed by the magnitude on 3k-1 bits, with the
// smallest k that fits.
void write_exp_int(BitBuffer& out, std::int64_t value);
BitBuffer encode_exp_int(std::int64_t value);
std::int64_t read_exp_int(BitReader& in);
std::size_t exp_int_bits(std::int64_t value) noexcept;

/// Coding bits, one code unit per character (7 or 8 bits), ETX.
/// Throws EncodeError for a non-ASCII byte under ASCII-7 or a NUL/ETX byte.
void write_plain_string(BitBuffer& out, std::string_view text, Coding coding);
void write_plain_string(BitBuffer& out, std::string_view text);
std::string read_plain_string(BitReader& in);

/// Coding bits, then sub-strings each led by a type bit (0 constant,
/// 1 dictionary key), NUL between sub-strings and ETX after the last.
void write_compressed_string(BitBuffer& out, const SegmentedString& seg, const Dictionary& dict);
std::string read_compressed_string(BitReader& in, const Dictionary& dict);

/// DICT_LOCAL header command. Throws EncodeError for an empty dictionary.
void write_dictionary(BitBuffer& out, const Dictionary& dict);
/// Reads the body of a DICT_LOCAL command (after its 101 command bits).
Dictionary read_dictionary_body(BitReader& in);

struct EncodedPayload {
    BitBuffer header;
    BitBuffer body;
    /// Bits spent on string literals in the body (framing included).
    std::size_t string_bits = 0;
    /// Bits spent on the DICT_LOCAL command; zero without a dictionary.
    std::size_t dictionary_bits = 0;

    std::size_t total_bits() const noexcept { return header.size() + body.size(); }
    std::size_t byte_length() const noexcept { return (total_bits() + 7) / 8; }
    BitBuffer bits() const;
};

/// Strings use compressed framing when a dictionary is given, plain otherwise.
EncodedPayload encode_program(const Program& program, const std::optional<Dictionary>& dict = std::nullopt);

struct DecodedProgram {
    Program program;
    std::optional<Dictionary> dictionary;
    /// Position one past the last bit of the body.
    std::size_t end_bit = 0;
};

/// Decodes a payload; bits after the structural end are ignored.
DecodedProgram decode_program(const BitBuffer& bits);
/// Decodes packed bytes; requires the trailing padding to be under one byte
/// and all zero.
DecodedProgram decode_program_bytes(std::span<const std::uint8_t> bytes);

} // namespace sqry
