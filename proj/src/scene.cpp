#include "combiverse/scene.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

#include "combiverse/image_io.hpp"

namespace combiverse {

using nlohmann::json;

void ObjectSpec::validate(Eigen::Index image_w, Eigen::Index image_h) const {
  if (x_min >= x_max)
    throw ValidationError("bbox: x_min (" + std::to_string(x_min) + ") must be < x_max (" +
                          std::to_string(x_max) + ")");
  if (y_min >= y_max)
    throw ValidationError("bbox: y_min (" + std::to_string(y_min) + ") must be < y_max (" +
                          std::to_string(y_max) + ")");
  if (x_min < 0 || y_min < 0 || x_max > image_w || y_max > image_h)
    throw ValidationError("bbox [" + std::to_string(x_min) + "," + std::to_string(y_min) + "," +
                          std::to_string(x_max) + "," + std::to_string(y_max) +
                          "] out of image bounds " + std::to_string(image_w) + "x" +
                          std::to_string(image_h));
}

void TriangleMesh::validate() const {
  if (vertex_count() == 0 || face_count() == 0) throw ValidationError("mesh: empty");
  if (vertex_colors.rows() != vertices.rows())
    throw ValidationError("mesh: vertex_colors count != vertex count");
  for (Eigen::Index f = 0; f < faces.rows(); ++f)
    for (int k = 0; k < 3; ++k) {
      int idx = faces(f, k);
      if (idx < 0 || idx >= vertices.rows())
        throw ValidationError("mesh: face " + std::to_string(f) + " references vertex " +
                              std::to_string(idx) + " out of range");
    }
  if (!vertices.allFinite()) throw ValidationError("mesh: non-finite vertex");
}

Eigen::AlignedBox3d TriangleMesh::bounds() const {
  Eigen::AlignedBox3d box;
  for (Eigen::Index i = 0; i < vertices.rows(); ++i) box.extend(vertices.row(i).transpose());
  return box;
}

void PlacementParams::validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ValidationError("placement: scale must be positive and finite");
  if (!rotation.allFinite()) throw ValidationError("placement: non-finite rotation");
  if (!translation.allFinite()) throw ValidationError("placement: non-finite translation");
}

void CameraSpec::validate() const {
  if (width <= 0 || height <= 0) throw ValidationError("camera: image size must be positive");
  if (projection == Projection::kPinhole && !(focal_px > 0.0))
    throw ValidationError("camera: pinhole focal length must be positive");
  if (projection == Projection::kOrthographic && !(ortho_px_per_unit > 0.0))
    throw ValidationError("camera: orthographic scale must be positive");
  Eigen::Matrix3d r = pose.linear();
  if (!r.allFinite() || std::abs(r.determinant() - 1.0) > 1e-6)
    throw ValidationError("camera: pose rotation is not a proper rotation");
}

CameraSpec CameraSpec::look_at(const Eigen::Vector3d& eye, const Eigen::Vector3d& target,
                               const Eigen::Vector3d& up, double focal_px, int width, int height) {
  Eigen::Vector3d fwd = (target - eye).normalized();
  Eigen::Vector3d right = fwd.cross(up).normalized();
  Eigen::Vector3d cam_up = right.cross(fwd);
  Eigen::Matrix3d rot;
  rot.col(0) = right;
  rot.col(1) = cam_up;
  rot.col(2) = fwd;
  CameraSpec cam;
  cam.pose = Eigen::Isometry3d::Identity();
  cam.pose.linear() = rot;
  cam.pose.translation() = eye;
  cam.focal_px = focal_px;
  cam.width = width;
  cam.height = height;
  cam.cx = 0.5 * width;
  cam.cy = 0.5 * height;
  return cam;
}

void ObjectRecord::validate(Eigen::Index image_h, Eigen::Index image_w,
                            const ObjectSpec& bbox) const {
  auto check = [&](Eigen::Index h, Eigen::Index w, const char* what) {
    require_same_shape(h, w, image_h, image_w, what);
  };
  if (mask.size() > 0) {
    check(mask.rows(), mask.cols(), "object mask");
    if (((mask != 0) && (mask != 1)).any()) throw ValidationError("object mask: values not in {0,1}");
    for (Eigen::Index y = 0; y < mask.rows(); ++y)
      for (Eigen::Index x = 0; x < mask.cols(); ++x)
        if (mask(y, x) && !bbox.contains(static_cast<int>(x), static_cast<int>(y)))
          throw ValidationError("object mask: foreground pixel (" + std::to_string(x) + "," +
                                std::to_string(y) + ") outside bbox");
  }
  if (cutout.height() > 0) check(cutout.height(), cutout.width(), "cutout");
  if (noised.height() > 0) check(noised.height(), noised.width(), "noised");
  if (inpaint_mask.size() > 0) check(inpaint_mask.rows(), inpaint_mask.cols(), "inpaint mask");
  if (completed.height() > 0) check(completed.height(), completed.width(), "completed");
  if (mesh) mesh->validate();
}

void SceneInput::validate() const {
  if (height() <= 0 || width() <= 0) throw ValidationError("scene: image must be non-empty");
  if (objects.empty()) throw ValidationError("scene: objects must be non-empty");
  for (const auto& obj : objects) obj.validate(width(), height());
  auto tokens = tokenize_caption(caption);
  for (int idx : spatial_token_indices)
    if (idx < 0 || idx >= static_cast<int>(tokens.size()))
      throw ValidationError("scene: spatial token index " + std::to_string(idx) +
                            " out of range for " + std::to_string(tokens.size()) + " tokens");
}

std::vector<std::string> tokenize_caption(const std::string& caption) {
  if (caption.empty() ||
      std::all_of(caption.begin(), caption.end(), [](unsigned char c) { return std::isspace(c); }))
    throw ValidationError("caption must be non-empty");
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    size_t begin = 0, end = current.size();
    while (begin < end && std::ispunct(static_cast<unsigned char>(current[begin]))) ++begin;
    while (end > begin && std::ispunct(static_cast<unsigned char>(current[end - 1]))) --end;
    if (end > begin) tokens.push_back(current.substr(begin, end - begin));
    current.clear();
  };
  for (unsigned char c : caption) {
    if (std::isspace(c))
      flush();
    else
      current.push_back(static_cast<char>(c));
  }
  flush();
  return tokens;
}

namespace {

const json& require_field(const json& doc, const char* field, const char* context) {
  auto it = doc.find(field);
  if (it == doc.end())
    throw ValidationError(std::string(context) + ": missing required field '" + field + "'");
  return *it;
}

}  // namespace

SceneInput load_scene(const std::filesystem::path& config_path) {
  std::ifstream in(config_path);
  if (!in) throw IoError("cannot open scene document: " + config_path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ValidationError("scene document is not valid JSON: " + std::string(e.what()));
  }

  SceneInput scene;
  const auto& image_field = require_field(doc, "image", "scene");
  if (!image_field.is_string()) throw ValidationError("scene: field 'image' must be a path string");
  std::filesystem::path image_path = image_field.get<std::string>();
  if (image_path.is_relative()) image_path = config_path.parent_path() / image_path;
  scene.image = read_png_rgba(image_path);

  const auto& objects = require_field(doc, "objects", "scene");
  if (!objects.is_array() || objects.empty())
    throw ValidationError("scene: field 'objects' must be a non-empty array");
  for (size_t i = 0; i < objects.size(); ++i) {
    const auto& bbox = require_field(objects[i], "bbox", "scene.objects");
    if (!bbox.is_array() || bbox.size() != 4 || !bbox[0].is_number_integer())
      throw ValidationError("scene: objects[" + std::to_string(i) +
                            "].bbox must be [x_min, y_min, x_max, y_max] integers");
    ObjectSpec spec{bbox[0].get<int>(), bbox[1].get<int>(), bbox[2].get<int>(), bbox[3].get<int>()};
    scene.objects.push_back(spec);
  }

  const auto& caption = require_field(doc, "caption", "scene");
  if (!caption.is_string()) throw ValidationError("scene: field 'caption' must be a string");
  scene.caption = caption.get<std::string>();

  if (doc.contains("spatial_tokens")) {
    const auto& toks = doc["spatial_tokens"];
    if (!toks.is_array()) throw ValidationError("scene: field 'spatial_tokens' must be an array");
    std::set<int> uniq;
    for (const auto& t : toks) {
      if (!t.is_number_integer())
        throw ValidationError("scene: field 'spatial_tokens' must contain integers");
      uniq.insert(t.get<int>());
    }
    scene.spatial_token_indices.assign(uniq.begin(), uniq.end());
  }

  scene.validate();
  return scene;
}

void save_scene(const SceneInput& scene, const std::filesystem::path& config_path,
                const std::string& image_filename) {
  scene.validate();
  if (!config_path.parent_path().empty())
    std::filesystem::create_directories(config_path.parent_path());
  write_png_rgba(config_path.parent_path() / image_filename, scene.image);

  json doc;
  doc["image"] = image_filename;
  doc["objects"] = json::array();
  for (const auto& obj : scene.objects)
    doc["objects"].push_back({{"bbox", {obj.x_min, obj.y_min, obj.x_max, obj.y_max}}});
  doc["caption"] = scene.caption;
  doc["spatial_tokens"] = scene.spatial_token_indices;

  std::ofstream out(config_path);
  if (!out) throw IoError("cannot write scene document: " + config_path.string());
  out << doc.dump(2) << "\n";
}

}  // namespace combiverse
