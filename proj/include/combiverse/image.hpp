#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "combiverse/errors.hpp"
#include "combiverse/math/rng.hpp"

namespace combiverse {

using PlaneU8 = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using PlaneF = Eigen::ArrayXXd;

//! Binary raster with values strictly in {0, 1}. Indexed (row=y, col=x).
using MaskImage = PlaneU8;

struct ImageRgb8 {
  PlaneU8 r, g, b;

  ImageRgb8() = default;
  ImageRgb8(Eigen::Index h, Eigen::Index w)
      : r(PlaneU8::Zero(h, w)), g(PlaneU8::Zero(h, w)), b(PlaneU8::Zero(h, w)) {}

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }
};

struct ImageRgba8 {
  PlaneU8 r, g, b, a;

  ImageRgba8() = default;
  ImageRgba8(Eigen::Index h, Eigen::Index w)
      : r(PlaneU8::Zero(h, w)),
        g(PlaneU8::Zero(h, w)),
        b(PlaneU8::Zero(h, w)),
        a(PlaneU8::Zero(h, w)) {}

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  ImageRgb8 rgb() const { return ImageRgb8{r, g, b}; }
};

//! Floating RGB planes in [0, 1]; the working type for renders and guidance.
struct ImageRgbF {
  PlaneF r, g, b;

  ImageRgbF() = default;
  ImageRgbF(Eigen::Index h, Eigen::Index w)
      : r(PlaneF::Zero(h, w)), g(PlaneF::Zero(h, w)), b(PlaneF::Zero(h, w)) {}

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  PlaneF& channel(int c) { return c == 0 ? r : (c == 1 ? g : b); }
  const PlaneF& channel(int c) const { return c == 0 ? r : (c == 1 ? g : b); }
};

struct ImageRgbaF {
  PlaneF r, g, b, a;

  ImageRgbaF() = default;
  ImageRgbaF(Eigen::Index h, Eigen::Index w)
      : r(PlaneF::Zero(h, w)),
        g(PlaneF::Zero(h, w)),
        b(PlaneF::Zero(h, w)),
        a(PlaneF::Zero(h, w)) {}

  Eigen::Index height() const { return r.rows(); }
  Eigen::Index width() const { return r.cols(); }

  ImageRgbF rgb() const { return ImageRgbF{r, g, b}; }
};

inline PlaneF to_unit(const PlaneU8& p) { return p.cast<double>() / 255.0; }

inline PlaneU8 to_u8(const PlaneF& p) {
  return (p.min(1.0).max(0.0) * 255.0 + 0.5).cast<std::uint8_t>();
}

//! Alpha-premultiplied float image from an 8-bit RGBA raster. Renders are
//! premultiplied, so losses against input images use this conversion.
inline ImageRgbaF premultiplied(const ImageRgba8& img) {
  ImageRgbaF out;
  out.a = to_unit(img.a);
  out.r = to_unit(img.r) * out.a;
  out.g = to_unit(img.g) * out.a;
  out.b = to_unit(img.b) * out.a;
  return out;
}

//! Straight-alpha 8-bit raster from a premultiplied float image (PNG convention).
inline ImageRgba8 to_straight_u8(const ImageRgbaF& img) {
  ImageRgba8 out(img.height(), img.width());
  PlaneF safe_a = img.a.max(1e-9);
  out.r = to_u8(img.r / safe_a * (img.a > 1e-9).cast<double>());
  out.g = to_u8(img.g / safe_a * (img.a > 1e-9).cast<double>());
  out.b = to_u8(img.b / safe_a * (img.a > 1e-9).cast<double>());
  out.a = to_u8(img.a);
  return out;
}

inline void require_same_shape(Eigen::Index h, Eigen::Index w, Eigen::Index h2, Eigen::Index w2,
                               const char* what) {
  if (h != h2 || w != w2)
    throw ValidationError(std::string(what) + ": dimension mismatch (" + std::to_string(h) + "x" +
                          std::to_string(w) + " vs " + std::to_string(h2) + "x" +
                          std::to_string(w2) + ")");
}

}  // namespace combiverse
