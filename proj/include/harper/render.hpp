#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harper/diffusion.hpp"

namespace harper {

/// Red-channel intensity of one pixel: 255 for NDetected, otherwise the
/// bounded displacement min(1, d) scaled to 0..255 (truncated), where d is
/// dy_max below the diagonal (beta < alpha) and dx_max on or above it.
std::uint8_t pixel_intensity(const PixelVerdict& v);

/// Grayscale payload, one byte per pixel, top image row = highest beta row.
std::vector<std::uint8_t> render_gray(const ScanGrid& grid);

/// RGB payload: white for NDetected, (intensity, 0, 0) otherwise.
std::vector<std::uint8_t> render_rgb(const ScanGrid& grid);

/// Binary PGM (P5) / PPM (P6), maxval 255, no header comments.
void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& gray);
void write_ppm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& rgb);

/// RFC-4180 CSV of a scan, row-major, floats with 17 significant digits.
/// The optional map tag appends a trailing `map` column.
std::string scan_csv(const ScanGrid& grid, const std::string& map_tag = "");

}  // namespace harper
