#pragma once

#include <string>
#include <string_view>

#include "kantorovich/image.hpp"

namespace kantorovich {

enum class PgmEncoding { Ascii /* P2 */, Binary /* P5 */ };

/// Parses P2/P5 data; pixels are divided by maxval.
GrayImage parse_pgm(std::string_view bytes);
GrayImage load_pgm(const std::string& path);

/// Clips to [0, 1] and quantizes with round-half-up to 8 or 16 bits.
std::string encode_pgm(const GrayImage& img, int bits = 8, PgmEncoding encoding = PgmEncoding::Binary);
void save_pgm(const GrayImage& img, const std::string& path, int bits = 8);

}  // namespace kantorovich
