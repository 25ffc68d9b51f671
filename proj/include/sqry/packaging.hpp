#pragma once

// Payload bytes and QR symbols.

#include "sqry/bitstream.hpp"
#include "sqry/codec.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace sqry {

/// Byte-mode capacity of a version 40 symbol at low error correction.
inline constexpr std::size_t kQrMaxBytes = 2953;

struct QrBudget {
    std::size_t max_bytes = kQrMaxBytes;
};

/// MSB-first packing with zero right-padding. Throws CapacityExceeded when
/// the byte length exceeds the budget.
std::vector<std::uint8_t> pack(const EncodedPayload& payload, QrBudget budget = {});
std::vector<std::uint8_t> pack(const BitBuffer& bits, QrBudget budget = {});

/// Inverse of pack for a known bit length.
BitBuffer unpack(std::span<const std::uint8_t> bytes, std::size_t bit_length);

enum class EcLevel { Low, Medium, Quartile, High };

struct QrOptions {
    EcLevel ec_level = EcLevel::Low;
    int module_pixels = 4;
    int quiet_zone = 4; // modules
};

/// 8-bit grayscale raster, row-major, 0 = black.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

/// Renders the bytes as a byte-mode QR symbol. Throws QrError for empty
/// input and CapacityExceeded when the bytes do not fit the chosen level.
GrayImage render_qr(std::span<const std::uint8_t> bytes, const QrOptions& options = {});
/// Decodes the single QR symbol in the image. Throws QrError if none is found.
std::vector<std::uint8_t> scan_qr(const GrayImage& image);

void write_png(const GrayImage& image, const std::filesystem::path& path);
GrayImage read_png(const std::filesystem::path& path);

void emit_qr(std::span<const std::uint8_t> bytes, const std::filesystem::path& path,
             const QrOptions& options = {});
std::vector<std::uint8_t> read_qr(const std::filesystem::path& path);

} // namespace sqry
