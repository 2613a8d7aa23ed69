#pragma once

#include <filesystem>
#include <vector>

#include "combiverse/scene.hpp"

namespace combiverse {

//! Wavefront OBJ with the common per-vertex color extension
//! ("v x y z r g b"). Normals/texcoords are ignored on import.
void write_obj(const std::filesystem::path& path, const TriangleMesh& mesh);
TriangleMesh read_obj(const std::filesystem::path& path);

//! Multi-mesh OBJ: one `o` group per mesh, shared vertex numbering.
void write_obj_multi(const std::filesystem::path& path, const std::vector<TriangleMesh>& meshes);

//! Single-file glTF 2.0 (embedded base64 buffer) with POSITION, COLOR_0 and
//! indices per mesh; one node per mesh, no node transforms (geometry is baked).
void write_gltf(const std::filesystem::path& path, const std::vector<TriangleMesh>& meshes);
std::vector<TriangleMesh> read_gltf(const std::filesystem::path& path);

}  // namespace combiverse
