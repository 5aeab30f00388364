#include "kantorovich/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "kantorovich/error.hpp"

namespace kantorovich {
namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto ch = static_cast<unsigned char>(bytes_[pos_]);
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(ch)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    long read_uint(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) throw ParseError(std::string("truncated data: expected ") + what, pos_);
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000'000L) throw ParseError(std::string(what) + " out of range", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("malformed header: expected ") + what, start);
        return value;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }
    std::string_view bytes() const { return bytes_; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        throw ParseError("malformed header: expected magic P2 or P5", 0);
    const bool binary = bytes[1] == '5';
    HeaderReader in(bytes);
    in.advance(2);
    const long width = in.read_uint("width");
    const long height = in.read_uint("height");
    const std::size_t maxval_at = in.pos();
    const long maxval = in.read_uint("maxval");
    if (width < 1 || height < 1) throw ParseError("malformed header: zero dimension", maxval_at);
    if (maxval < 1 || maxval > 65535) throw ParseError("maxval must be in [1, 65535]", maxval_at);

    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<double> pixels;
    pixels.reserve(count);
    const double scale = static_cast<double>(maxval);

    if (binary) {
        if (in.pos() >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[in.pos()])))
            throw ParseError("malformed header: missing whitespace after maxval", in.pos());
        in.advance(1);
        const std::size_t bpp = maxval < 256 ? 1 : 2;
        const std::size_t data = in.pos();
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = data + i * bpp;
            if (at + bpp > bytes.size()) throw ParseError("truncated data", bytes.size());
            long v = static_cast<unsigned char>(bytes[at]);
            if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(bytes[at + 1]);
            if (v > maxval) throw ParseError("pixel value exceeds maxval", at);
            pixels.push_back(static_cast<double>(v) / scale);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t at = in.pos();
            const long v = in.read_uint("pixel value");
            if (v > maxval) throw ParseError("pixel value exceeds maxval", at);
            pixels.push_back(static_cast<double>(v) / scale);
        }
    }
    return GrayImage(static_cast<int>(height), static_cast<int>(width), std::move(pixels));
}

GrayImage load_pgm(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "'");
    const std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return parse_pgm(bytes);
}

std::string encode_pgm(const GrayImage& img, int bits, PgmEncoding encoding) {
    if (bits != 8 && bits != 16) throw InvalidArgument("PGM bit depth must be 8 or 16");
    img.validate();
    const long maxval = bits == 8 ? 255 : 65535;
    std::ostringstream out;
    out << (encoding == PgmEncoding::Binary ? "P5" : "P2") << '\n'
        << img.width << ' ' << img.height << '\n'
        << maxval << '\n';
    std::string body;
    for (std::size_t i = 0; i < img.size(); ++i) {
        const double v = std::clamp(img.pixels[i], 0.0, 1.0);
        const auto q = static_cast<long>(std::floor(v * static_cast<double>(maxval) + 0.5));
        if (encoding == PgmEncoding::Binary) {
            if (bits == 16) body.push_back(static_cast<char>((q >> 8) & 0xFF));
            body.push_back(static_cast<char>(q & 0xFF));
        } else {
            body += std::to_string(q);
            const bool row_end = (i + 1) % static_cast<std::size_t>(img.width) == 0;
            body.push_back(row_end ? '\n' : ' ');
        }
    }
    return out.str() + body;
}

void save_pgm(const GrayImage& img, const std::string& path, int bits) {
    const std::string bytes = encode_pgm(img, bits, PgmEncoding::Binary);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw IoError("write to '" + path + "' failed");
}

}  // namespace kantorovich
