#include "combiverse/mesh_ops.hpp"

#include <array>
#include <cmath>
#include <map>
#include <unordered_map>
#include <vector>

namespace combiverse {

TriangleMesh normalize_to_unit_cube(TriangleMesh mesh) {
  mesh.validate();
  Eigen::AlignedBox3d box = mesh.bounds();
  Eigen::Vector3d center = box.center();
  double extent = box.sizes().maxCoeff();
  double scale = extent > 1.0 ? 1.0 / extent : 1.0;
  bool recenter = center.norm() > 1e-12;
  if (scale != 1.0 || recenter) {
    for (Eigen::Index i = 0; i < mesh.vertices.rows(); ++i)
      mesh.vertices.row(i) = (mesh.vertices.row(i).transpose() - center).transpose() * scale;
  }
  return mesh;
}

namespace {

TriangleMesh cluster_on_grid(const TriangleMesh& mesh, int cells_per_axis) {
  Eigen::AlignedBox3d box = mesh.bounds();
  Eigen::Vector3d lo = box.min();
  Eigen::Vector3d sizes = box.sizes().cwiseMax(1e-12);

  auto cell_of = [&](const Eigen::Vector3d& v) {
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) {
      int idx = static_cast<int>((v[k] - lo[k]) / sizes[k] * cells_per_axis);
      c[k] = std::min(std::max(idx, 0), cells_per_axis - 1);
    }
    return (static_cast<std::int64_t>(c[0]) * cells_per_axis + c[1]) * cells_per_axis + c[2];
  };

  std::unordered_map<std::int64_t, int> cell_to_new;
  std::vector<int> remap(mesh.vertex_count());
  std::vector<Eigen::Vector3d> pos_acc;
  std::vector<Eigen::Vector3d> col_acc;
  std::vector<int> counts;
  for (Eigen::Index i = 0; i < mesh.vertex_count(); ++i) {
    std::int64_t cell = cell_of(mesh.vertices.row(i).transpose());
    auto [it, inserted] = cell_to_new.try_emplace(cell, static_cast<int>(pos_acc.size()));
    if (inserted) {
      pos_acc.emplace_back(Eigen::Vector3d::Zero());
      col_acc.emplace_back(Eigen::Vector3d::Zero());
      counts.push_back(0);
    }
    int ni = it->second;
    remap[i] = ni;
    pos_acc[ni] += mesh.vertices.row(i).transpose();
    col_acc[ni] += mesh.vertex_colors.row(i).transpose();
    counts[ni] += 1;
  }

  TriangleMesh out;
  out.vertices.resize(static_cast<Eigen::Index>(pos_acc.size()), 3);
  out.vertex_colors.resize(static_cast<Eigen::Index>(pos_acc.size()), 3);
  for (size_t i = 0; i < pos_acc.size(); ++i) {
    out.vertices.row(static_cast<Eigen::Index>(i)) = (pos_acc[i] / counts[i]).transpose();
    out.vertex_colors.row(static_cast<Eigen::Index>(i)) = (col_acc[i] / counts[i]).transpose();
  }

  std::vector<std::array<int, 3>> faces;
  std::map<std::array<int, 3>, bool> seen;
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    std::array<int, 3> tri{remap[mesh.faces(f, 0)], remap[mesh.faces(f, 1)], remap[mesh.faces(f, 2)]};
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) continue;
    std::array<int, 3> key = tri;
    std::sort(key.begin(), key.end());
    if (seen.emplace(key, true).second) faces.push_back(tri);
  }
  out.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (size_t f = 0; f < faces.size(); ++f)
    out.faces.row(static_cast<Eigen::Index>(f)) << faces[f][0], faces[f][1], faces[f][2];
  return out;
}

}  // namespace

TriangleMesh decimate_mesh(const TriangleMesh& mesh, int target_faces) {
  if (target_faces < 4) throw ValidationError("decimate_mesh: target_faces must be >= 4");
  mesh.validate();
  if (mesh.face_count() <= target_faces) return mesh;

  // Finest grid that meets the budget keeps the bounds tightest.
  int lo = 1, hi = 1024, best = -1;
  TriangleMesh best_mesh;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    TriangleMesh candidate = cluster_on_grid(mesh, mid);
    if (candidate.face_count() <= target_faces && candidate.face_count() > 0) {
      best = mid;
      best_mesh = std::move(candidate);
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (best < 0 || best_mesh.face_count() == 0)
    throw ValidationError("decimate_mesh: degenerate output for target " +
                          std::to_string(target_faces));
  best_mesh.validate();
  return best_mesh;
}

TriangleMesh make_cube(double extent, const Eigen::Vector3d& color) {
  TriangleMesh mesh;
  double h = 0.5 * extent;
  mesh.vertices.resize(8, 3);
  mesh.vertices << -h, -h, -h, h, -h, -h, h, h, -h, -h, h, -h,
                   -h, -h,  h, h, -h,  h, h, h,  h, -h, h,  h;
  mesh.faces.resize(12, 3);
  mesh.faces << 0, 2, 1, 0, 3, 2,  // -z
                4, 5, 6, 4, 6, 7,  // +z
                0, 1, 5, 0, 5, 4,  // -y
                3, 7, 6, 3, 6, 2,  // +y
                0, 4, 7, 0, 7, 3,  // -x
                1, 2, 6, 1, 6, 5;  // +x
  mesh.vertex_colors = color.transpose().replicate(8, 1);
  return mesh;
}

TriangleMesh make_icosphere(int subdivisions, double radius, const Eigen::Vector3d& color) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
      {3, 8, 9},   {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

  std::map<std::pair<int, int>, int> midpoint_cache;
  auto midpoint = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint_cache.find(key);
    if (it != midpoint_cache.end()) return it->second;
    Eigen::Vector3d m = (verts[a] + verts[b]).normalized();
    verts.push_back(m);
    int idx = static_cast<int>(verts.size()) - 1;
    midpoint_cache.emplace(key, idx);
    return idx;
  };

  for (int level = 0; level < subdivisions; ++level) {
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      int ab = midpoint(f[0], f[1]);
      int bc = midpoint(f[1], f[2]);
      int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }

  TriangleMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(verts.size()), 3);
  for (size_t i = 0; i < verts.size(); ++i)
    mesh.vertices.row(static_cast<Eigen::Index>(i)) = (verts[i] * radius).transpose();
  mesh.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (size_t f = 0; f < faces.size(); ++f)
    mesh.faces.row(static_cast<Eigen::Index>(f)) << faces[f][0], faces[f][1], faces[f][2];
  mesh.vertex_colors = color.transpose().replicate(mesh.vertices.rows(), 1);
  return mesh;
}

TriangleMesh make_quad(double width, double height, const Eigen::Vector3d& color) {
  TriangleMesh mesh;
  double hw = 0.5 * width, hh = 0.5 * height;
  mesh.vertices.resize(4, 3);
  mesh.vertices << -hw, -hh, 0, hw, -hh, 0, hw, hh, 0, -hw, hh, 0;
  mesh.faces.resize(2, 3);
  mesh.faces << 0, 1, 2, 0, 2, 3;
  mesh.vertex_colors = color.transpose().replicate(4, 1);
  return mesh;
}

}  // namespace combiverse
