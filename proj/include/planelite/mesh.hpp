#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace pl {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

inline uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (uint64_t(uint32_t(a)) << 32) | uint32_t(b);
}

/// Indexed triangle mesh with face->cluster labels and adjacency maps.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<Eigen::Vector3i> faces;
    std::vector<int> face_cluster;  // -1 until partitioned

    // adjacency, valid after build_adjacency()
    std::vector<std::vector<int>> vertex_faces;
    std::unordered_map<uint64_t, std::array<int, 2>> edge_faces;  // second = -1 for boundary
    int nonmanifold_edges = 0;

    void build_adjacency();
    bool has_adjacency() const { return vertex_faces.size() == vertices.size() && !vertices.empty(); }

    Vec3 face_normal(int f) const;
    double face_area(int f) const;
    Vec3 face_centroid(int f) const;

    // Drops faces with repeated vertex indices, returns how many were removed.
    int drop_degenerate_faces();
};

}  // namespace pl
