#include "harper/render.hpp"

#include <cstdio>
#include <stdexcept>

namespace harper {

namespace {

void write_binary(const std::string& path, const std::string& header,
                  const std::vector<std::uint8_t>& payload) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open " + path);
  std::fwrite(header.data(), 1, header.size(), fp);
  std::fwrite(payload.data(), 1, payload.size(), fp);
  std::fclose(fp);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::uint8_t pixel_intensity(const PixelVerdict& v) {
  if (v.verdict == Verdict::NDetected) return 255;
  const double d = (v.params.beta < v.params.alpha) ? v.dy_max : v.dx_max;
  return static_cast<std::uint8_t>(std::min(1.0, d) * 255.0);
}

std::vector<std::uint8_t> render_gray(const ScanGrid& grid) {
  const int nx = grid.spec.nx, ny = grid.spec.ny;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(nx) * ny);
  for (int r = 0; r < ny; ++r) {
    const int image_row = ny - 1 - r;  // beta increases upward in the image
    for (int c = 0; c < nx; ++c) {
      out[static_cast<std::size_t>(image_row) * nx + c] =
          pixel_intensity(grid.verdicts[static_cast<std::size_t>(r) * nx + c]);
    }
  }
  return out;
}

std::vector<std::uint8_t> render_rgb(const ScanGrid& grid) {
  const int nx = grid.spec.nx, ny = grid.spec.ny;
  std::vector<std::uint8_t> out(3 * static_cast<std::size_t>(nx) * ny);
  for (int r = 0; r < ny; ++r) {
    const int image_row = ny - 1 - r;
    for (int c = 0; c < nx; ++c) {
      const PixelVerdict& v = grid.verdicts[static_cast<std::size_t>(r) * nx + c];
      const std::size_t base = 3 * (static_cast<std::size_t>(image_row) * nx + c);
      if (v.verdict == Verdict::NDetected) {
        out[base] = out[base + 1] = out[base + 2] = 255;
      } else {
        out[base] = pixel_intensity(v);
        out[base + 1] = 0;
        out[base + 2] = 0;
      }
    }
  }
  return out;
}

void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& gray) {
  if (gray.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("write_pgm: payload size mismatch");
  }
  write_binary(path, "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n",
               gray);
}

void write_ppm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& rgb) {
  if (rgb.size() != 3 * static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("write_ppm: payload size mismatch");
  }
  write_binary(path, "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n",
               rgb);
}

std::string scan_csv(const ScanGrid& grid, const std::string& map_tag) {
  std::string out = "alpha,beta,verdict,dx_max,dy_max,iters,seeds";
  if (!map_tag.empty()) out += ",map";
  out += "\r\n";
  for (const auto& v : grid.verdicts) {
    out += fmt17(v.params.alpha) + "," + fmt17(v.params.beta) + ",";
    out += (v.verdict == Verdict::NDetected) ? "NDetected" : "EPresumed";
    out += "," + fmt17(v.dx_max) + "," + fmt17(v.dy_max) + "," +
           std::to_string(v.iterations_used) + "," + std::to_string(v.seeds_used);
    if (!map_tag.empty()) out += "," + map_tag;
    out += "\r\n";
  }
  return out;
}

}  // namespace harper
