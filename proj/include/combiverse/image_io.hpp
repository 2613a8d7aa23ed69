#pragma once

#include <filesystem>

#include "combiverse/image.hpp"

namespace combiverse {

//! 8-bit RGBA PNG. Grayscale/palette/RGB inputs are expanded to RGBA on read.
ImageRgba8 read_png_rgba(const std::filesystem::path& path);
void write_png_rgba(const std::filesystem::path& path, const ImageRgba8& img);

//! Single-channel PNG. Masks are stored as {0, 255} for visibility and
//! mapped back to {0, 1} on read (threshold 128).
MaskImage read_png_mask(const std::filesystem::path& path);
void write_png_mask(const std::filesystem::path& path, const MaskImage& mask);

void write_png_rgb(const std::filesystem::path& path, const ImageRgb8& img);
ImageRgb8 read_png_rgb(const std::filesystem::path& path);

}  // namespace combiverse
