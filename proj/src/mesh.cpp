#include "planelite/mesh.hpp"

#include <algorithm>

namespace pl {

void TriMesh::build_adjacency() {
    vertex_faces.assign(vertices.size(), {});
    edge_faces.clear();
    edge_faces.reserve(faces.size() * 2);
    nonmanifold_edges = 0;
    for (int f = 0; f < (int)faces.size(); ++f) {
        const auto& tri = faces[f];
        for (int k = 0; k < 3; ++k) {
            vertex_faces[tri[k]].push_back(f);
            uint64_t key = edge_key(tri[k], tri[(k + 1) % 3]);
            auto it = edge_faces.find(key);
            if (it == edge_faces.end()) {
                edge_faces[key] = {f, -1};
            } else if (it->second[1] < 0) {
                it->second[1] = f;
            } else {
                ++nonmanifold_edges;
            }
        }
    }
    if (face_cluster.size() != faces.size()) face_cluster.assign(faces.size(), -1);
}

Vec3 TriMesh::face_normal(int f) const {
    const auto& t = faces[f];
    Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
    double l = n.norm();
    return l > 0 ? Vec3(n / l) : Vec3::Zero();
}

double TriMesh::face_area(int f) const {
    const auto& t = faces[f];
    return 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
}

Vec3 TriMesh::face_centroid(int f) const {
    const auto& t = faces[f];
    return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
}

int TriMesh::drop_degenerate_faces() {
    int dropped = 0;
    std::vector<Eigen::Vector3i> keep;
    keep.reserve(faces.size());
    std::vector<int> keep_cluster;
    bool labeled = face_cluster.size() == faces.size();
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& t = faces[f];
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            ++dropped;
            continue;
        }
        keep.push_back(t);
        if (labeled) keep_cluster.push_back(face_cluster[f]);
    }
    faces = std::move(keep);
    face_cluster = labeled ? std::move(keep_cluster) : std::vector<int>(faces.size(), -1);
    return dropped;
}

}  // namespace pl
