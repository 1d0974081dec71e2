#pragma once

#include <opencv2/core.hpp>
#include <optional>
#include <string>
#include <vector>

#include "planelite/camera.hpp"
#include "planelite/mesh.hpp"

namespace pl {

struct LoadMeshResult {
    TriMesh mesh;
    int dropped_degenerate = 0;
};

// PLY, ascii or binary_little_endian, triangles only. Throws std::runtime_error
// with a byte offset on malformed input.
LoadMeshResult load_mesh(const std::string& path);

// Binary little-endian PLY with double precision positions, optional uint8 RGB
// per-vertex colors (used by the cluster debug dumps).
void save_mesh(const TriMesh& mesh, const std::string& path,
               const std::vector<Eigen::Vector3i>* vertex_colors = nullptr);

CameraIntrinsics load_intrinsics(const std::string& path);
void save_intrinsics(const CameraIntrinsics& intr, const std::string& path);

// Trajectory: TUM text (timestamp tx ty tz qx qy qz qw, camera->world) or the
// matrix form "frame_id m00 .. m33"; auto-detected per line token count.
// Returned poses are camera->world.
std::vector<std::pair<double, Pose>> load_trajectory(const std::string& path);
void save_trajectory_tum(const std::vector<std::pair<double, Pose>>& cam_to_world,
                         const std::string& path);

// Loads color/NNN + depth/NNN pairs (sorted by filename), converts poses to
// world->camera and depth to meters.
FrameSet load_frames(const std::string& dir, const std::string& trajectory_path,
                     const std::string& intrinsics_path);

struct FaceUV {
    std::array<Vec2, 3> uv;  // normalized [0,1]^2 atlas coords per corner
};

// OBJ + MTL + PNG atlas. Throws if a face has no UVs.
void save_textured_mesh(const TriMesh& mesh, const std::vector<std::optional<FaceUV>>& face_uvs,
                        const cv::Mat& atlas, const std::string& obj_path);

struct StatsReport {
    size_t in_vertices = 0, in_faces = 0, keyframes = 0;
    size_t out_vertices = 0, out_faces = 0;
    std::vector<std::pair<std::string, double>> stage_seconds;
    double total_seconds = 0;
};

// stats CSV holds only deterministic counts/ratios; wall times go to a
// separate timings CSV so repeated runs produce byte-identical stats.
void write_stats(const StatsReport& report, const std::string& csv_path,
                 const std::string& timings_csv_path, const std::string& table_path);
std::string stats_csv_string(const StatsReport& report);

}  // namespace pl
