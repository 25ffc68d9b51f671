#include "sqry/packaging.hpp"

#include "sqry/error.hpp"

#include <BitMatrix.h>
#include <ReadBarcode.h>
#include <qrcode/QRErrorCorrectionLevel.h>
#include <qrcode/QRWriter.h>

#include <png.h>

#include <stdexcept>
#include <string>

namespace sqry {

std::vector<std::uint8_t> pack(const BitBuffer& bits, QrBudget budget) {
    const std::size_t bytes = (bits.size() + 7) / 8;
    if (bytes > budget.max_bytes)
        throw CapacityExceeded(bits.size(), budget.max_bytes);
    return bits.bytes();
}

std::vector<std::uint8_t> pack(const EncodedPayload& payload, QrBudget budget) {
    return pack(payload.bits(), budget);
}

BitBuffer unpack(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
    return BitBuffer::from_bytes(bytes, bit_length);
}

namespace {

// Version 40 byte-mode capacities.
std::size_t byte_capacity(EcLevel level) {
    switch (level) {
    case EcLevel::Low: return 2953;
    case EcLevel::Medium: return 2331;
    case EcLevel::Quartile: return 1663;
    case EcLevel::High: return 1273;
    }
    return 0;
}

ZXing::QRCode::ErrorCorrectionLevel to_zxing(EcLevel level) {
    using ZXing::QRCode::ErrorCorrectionLevel;
    switch (level) {
    case EcLevel::Low: return ErrorCorrectionLevel::Low;
    case EcLevel::Medium: return ErrorCorrectionLevel::Medium;
    case EcLevel::Quartile: return ErrorCorrectionLevel::Quality;
    case EcLevel::High: return ErrorCorrectionLevel::High;
    }
    return ErrorCorrectionLevel::Low;
}

} // namespace

GrayImage render_qr(std::span<const std::uint8_t> bytes, const QrOptions& options) {
    if (bytes.empty())
        throw QrError("cannot encode an empty payload");
    if (bytes.size() > byte_capacity(options.ec_level))
        throw CapacityExceeded(bytes.size() * 8, byte_capacity(options.ec_level));
    if (options.module_pixels < 1 || options.quiet_zone < 0)
        throw std::invalid_argument("invalid QR rendering options");

    std::wstring content(bytes.begin(), bytes.end());
    ZXing::BitMatrix matrix;
    try {
        matrix = ZXing::QRCode::Writer()
                     .setEncoding(ZXing::CharacterSet::BINARY)
                     .setErrorCorrectionLevel(to_zxing(options.ec_level))
                     .setMargin(0)
                     .encode(content, 0, 0);
    } catch (const std::invalid_argument& e) {
        throw QrError(std::string("QR encoding failed: ") + e.what());
    }

    const int scale = options.module_pixels;
    const int border = options.quiet_zone * scale;
    GrayImage image;
    image.width = matrix.width() * scale + 2 * border;
    image.height = matrix.height() * scale + 2 * border;
    image.pixels.assign(static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height), 255);
    for (int y = 0; y < matrix.height(); ++y)
        for (int x = 0; x < matrix.width(); ++x)
            if (matrix.get(x, y))
                for (int dy = 0; dy < scale; ++dy)
                    for (int dx = 0; dx < scale; ++dx)
                        image.pixels[static_cast<std::size_t>(border + y * scale + dy) * image.width + border +
                                     x * scale + dx] = 0;
    return image;
}

std::vector<std::uint8_t> scan_qr(const GrayImage& image) {
    if (image.width <= 0 || image.height <= 0 ||
        image.pixels.size() != static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height))
        throw QrError("invalid image");
    ZXing::ImageView view(image.pixels.data(), image.width, image.height, ZXing::ImageFormat::Lum);
    ZXing::ReaderOptions opts;
    opts.setFormats(ZXing::BarcodeFormat::QRCode).setTryHarder(true);
    auto barcode = ZXing::ReadBarcode(view, opts);
    if (!barcode.isValid())
        throw QrError("no readable QR symbol found");
    const auto& bytes = barcode.bytes();
    return {bytes.begin(), bytes.end()};
}

void write_png(const GrayImage& image, const std::filesystem::path& path) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width);
    png.height = static_cast<png_uint_32>(image.height);
    png.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&png, path.c_str(), 0, image.pixels.data(), 0, nullptr))
        throw std::runtime_error("cannot write " + path.string() + ": " + png.message);
}

GrayImage read_png(const std::filesystem::path& path) {
    png_image png{};
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.c_str()))
        throw std::runtime_error("cannot read " + path.string() + ": " + png.message);
    png.format = PNG_FORMAT_GRAY;
    GrayImage image;
    image.width = static_cast<int>(png.width);
    image.height = static_cast<int>(png.height);
    image.pixels.resize(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, image.pixels.data(), 0, nullptr)) {
        std::string message = png.message;
        png_image_free(&png);
        throw std::runtime_error("cannot decode " + path.string() + ": " + message);
    }
    return image;
}

void emit_qr(std::span<const std::uint8_t> bytes, const std::filesystem::path& path, const QrOptions& options) {
    write_png(render_qr(bytes, options), path);
}

std::vector<std::uint8_t> read_qr(const std::filesystem::path& path) { return scan_qr(read_png(path)); }

} // namespace sqry
