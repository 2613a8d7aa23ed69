#pragma once

#include "combiverse/scene.hpp"

namespace combiverse {

//! Recenter on the bounding-box midpoint and scale so the largest axis extent
//! equals 1. No-op on meshes already inside that envelope.
TriangleMesh normalize_to_unit_cube(TriangleMesh mesh);

//! Grid-clustering decimation. Vertices are merged per cell (placed at the
//! cluster centroid) on progressively coarser grids until the face budget is
//! met; degenerate and duplicate faces are dropped. Bounds move by less than
//! half a cell, comfortably inside the 5% contract at sane budgets.
TriangleMesh decimate_mesh(const TriangleMesh& mesh, int target_faces);

//! Axis-aligned cube with uniform per-vertex color, edge length `extent`.
TriangleMesh make_cube(double extent = 1.0, const Eigen::Vector3d& color = {0.8, 0.8, 0.8});

//! UV-free icosphere for decimation tests; `subdivisions` quadruple the face
//! count each level (20 * 4^n faces).
TriangleMesh make_icosphere(int subdivisions, double radius = 0.5,
                            const Eigen::Vector3d& color = {0.8, 0.8, 0.8});

//! Two-triangle quad in the local XY plane (flat sprite geometry).
TriangleMesh make_quad(double width, double height, const Eigen::Vector3d& color);

}  // namespace combiverse
