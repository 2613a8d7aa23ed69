#include "combiverse/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

namespace combiverse {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

//! Reads any PNG into interleaved 8-bit rows with `channels` samples per pixel.
std::vector<std::vector<png_byte>> read_png_rows(const std::filesystem::path& path, int channels,
                                                 png_uint_32& out_w, png_uint_32& out_h) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw IoError("cannot open PNG for reading: " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }

  std::vector<std::vector<png_byte>> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("failed to decode PNG: " + path.string());
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  png_byte color_type = png_get_color_type(png, info);
  png_byte bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);

  if (channels == 4) {
    if (color_type == PNG_COLOR_TYPE_RGB || color_type == PNG_COLOR_TYPE_GRAY ||
        color_type == PNG_COLOR_TYPE_PALETTE)
      png_set_filler(png, 0xFF, PNG_FILLER_AFTER);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
  } else if (channels == 3) {
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
      png_set_gray_to_rgb(png);
  } else if (channels == 1) {
    if (color_type & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  }

  png_read_update_info(png, info);

  rows.assign(h, std::vector<png_byte>(png_get_rowbytes(png, info)));
  std::vector<png_bytep> row_ptrs(h);
  for (png_uint_32 y = 0; y < h; ++y) row_ptrs[y] = rows[y].data();
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  out_w = w;
  out_h = h;
  return rows;
}

void write_png_rows(const std::filesystem::path& path, const std::vector<std::vector<png_byte>>& rows,
                    png_uint_32 w, png_uint_32 h, int color_type) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw IoError("cannot open PNG for writing: " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("failed to encode PNG: " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, w, h, 8, color_type, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (png_uint_32 y = 0; y < h; ++y)
    png_write_row(png, const_cast<png_bytep>(rows[y].data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace

ImageRgba8 read_png_rgba(const std::filesystem::path& path) {
  png_uint_32 w = 0, h = 0;
  auto rows = read_png_rows(path, 4, w, h);
  ImageRgba8 img(h, w);
  for (png_uint_32 y = 0; y < h; ++y) {
    const png_byte* row = rows[y].data();
    for (png_uint_32 x = 0; x < w; ++x) {
      img.r(y, x) = row[4 * x + 0];
      img.g(y, x) = row[4 * x + 1];
      img.b(y, x) = row[4 * x + 2];
      img.a(y, x) = row[4 * x + 3];
    }
  }
  return img;
}

void write_png_rgba(const std::filesystem::path& path, const ImageRgba8& img) {
  png_uint_32 h = static_cast<png_uint_32>(img.height());
  png_uint_32 w = static_cast<png_uint_32>(img.width());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(4 * w));
  for (png_uint_32 y = 0; y < h; ++y) {
    png_byte* row = rows[y].data();
    for (png_uint_32 x = 0; x < w; ++x) {
      row[4 * x + 0] = img.r(y, x);
      row[4 * x + 1] = img.g(y, x);
      row[4 * x + 2] = img.b(y, x);
      row[4 * x + 3] = img.a(y, x);
    }
  }
  write_png_rows(path, rows, w, h, PNG_COLOR_TYPE_RGBA);
}

ImageRgb8 read_png_rgb(const std::filesystem::path& path) {
  png_uint_32 w = 0, h = 0;
  auto rows = read_png_rows(path, 3, w, h);
  ImageRgb8 img(h, w);
  for (png_uint_32 y = 0; y < h; ++y) {
    const png_byte* row = rows[y].data();
    for (png_uint_32 x = 0; x < w; ++x) {
      img.r(y, x) = row[3 * x + 0];
      img.g(y, x) = row[3 * x + 1];
      img.b(y, x) = row[3 * x + 2];
    }
  }
  return img;
}

void write_png_rgb(const std::filesystem::path& path, const ImageRgb8& img) {
  png_uint_32 h = static_cast<png_uint_32>(img.height());
  png_uint_32 w = static_cast<png_uint_32>(img.width());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(3 * w));
  for (png_uint_32 y = 0; y < h; ++y) {
    png_byte* row = rows[y].data();
    for (png_uint_32 x = 0; x < w; ++x) {
      row[3 * x + 0] = img.r(y, x);
      row[3 * x + 1] = img.g(y, x);
      row[3 * x + 2] = img.b(y, x);
    }
  }
  write_png_rows(path, rows, w, h, PNG_COLOR_TYPE_RGB);
}

MaskImage read_png_mask(const std::filesystem::path& path) {
  png_uint_32 w = 0, h = 0;
  auto rows = read_png_rows(path, 1, w, h);
  MaskImage mask(h, w);
  for (png_uint_32 y = 0; y < h; ++y)
    for (png_uint_32 x = 0; x < w; ++x) mask(y, x) = rows[y][x] >= 128 ? 1 : 0;
  return mask;
}

void write_png_mask(const std::filesystem::path& path, const MaskImage& mask) {
  png_uint_32 h = static_cast<png_uint_32>(mask.rows());
  png_uint_32 w = static_cast<png_uint_32>(mask.cols());
  std::vector<std::vector<png_byte>> rows(h, std::vector<png_byte>(w));
  for (png_uint_32 y = 0; y < h; ++y)
    for (png_uint_32 x = 0; x < w; ++x) rows[y][x] = mask(y, x) ? 255 : 0;
  write_png_rows(path, rows, w, h, PNG_COLOR_TYPE_GRAY);
}

}  // namespace combiverse
