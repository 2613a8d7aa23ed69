#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "combiverse/image.hpp"

namespace combiverse {

//! Axis-aligned pixel box. Origin at the top-left corner, x rightward,
//! y downward; max edges exclusive.
struct ObjectSpec {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  int width() const { return x_max - x_min; }
  int height() const { return y_max - y_min; }
  double center_x() const { return 0.5 * (x_min + x_max); }
  double center_y() const { return 0.5 * (y_min + y_max); }

  bool contains(int x, int y) const { return x >= x_min && x < x_max && y >= y_min && y < y_max; }

  void validate(Eigen::Index image_w, Eigen::Index image_h) const;
};

//! Triangle mesh with per-vertex color; object-local units, normalized so the
//! largest axis extent is 1 and the centroid of the bounds sits at the origin.
struct TriangleMesh {
  Eigen::MatrixX3d vertices;
  Eigen::MatrixX3i faces;
  Eigen::MatrixX3d vertex_colors;  // [0, 1]

  Eigen::Index vertex_count() const { return vertices.rows(); }
  Eigen::Index face_count() const { return faces.rows(); }

  void validate() const;
  Eigen::AlignedBox3d bounds() const;
};

//! Per-object similarity transform: the optimization variables.
//! Rotation is a 3-vector of Euler angles in radians, extrinsic X-Y-Z order
//! (the composed matrix is Rz * Ry * Rx).
struct PlacementParams {
  double scale = 1.0;
  Eigen::Vector3d rotation = Eigen::Vector3d::Zero();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  void validate() const;
};

enum class Projection { kPinhole, kOrthographic };

//! Camera-to-world pose plus intrinsics. The camera looks down its local +Z
//! with +X right and +Y up; larger image rows map to smaller camera-space y.
struct CameraSpec {
  Eigen::Isometry3d pose = Eigen::Isometry3d::Identity();
  Projection projection = Projection::kPinhole;
  double focal_px = 128.0;         // pinhole focal length in pixels
  double ortho_px_per_unit = 64.0; // orthographic pixels per scene unit
  double cx = 32.0;
  double cy = 32.0;
  int width = 64;
  int height = 64;

  void validate() const;

  static CameraSpec look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                            const Eigen::Vector3d& up, double focal_px, int width, int height);
};

//! Per-object intermediate artifacts accumulated by the decomposition stage.
struct ObjectRecord {
  MaskImage mask;          // {0,1}, H x W, foreground inside the bbox
  ImageRgba8 cutout;       // source pixels under the mask, alpha = mask
  ImageRgb8 noised;        // foreground over uniform-noise background
  MaskImage inpaint_mask;  // inside bbox, outside mask
  ImageRgb8 completed;     // inpainted object image
  std::optional<TriangleMesh> mesh;

  void validate(Eigen::Index image_h, Eigen::Index image_w, const ObjectSpec& bbox) const;
};

struct SceneInput {
  ImageRgba8 image;
  std::vector<ObjectSpec> objects;
  std::string caption;
  std::vector<int> spatial_token_indices;  // sorted, unique

  Eigen::Index height() const { return image.height(); }
  Eigen::Index width() const { return image.width(); }

  void validate() const;
};

//! Deterministic whitespace-and-punctuation tokenizer. Splits on whitespace,
//! strips leading/trailing punctuation, keeps case. Backend adapters may
//! substitute their own tokenizer; indices are then relative to that one.
std::vector<std::string> tokenize_caption(const std::string& caption);

//! Loads a scene document ({image, objects, caption, spatial_tokens}) and the
//! referenced image (path relative to the document). Validates everything.
SceneInput load_scene(const std::filesystem::path& config_path);

//! Writes the scene document plus its image next to it.
void save_scene(const SceneInput& scene, const std::filesystem::path& config_path,
                const std::string& image_filename = "scene_image.png");

}  // namespace combiverse
