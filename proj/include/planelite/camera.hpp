#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <opencv2/core.hpp>
#include <vector>

#include "planelite/mesh.hpp"

namespace pl {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Rigid transform y = R x + t.
struct Pose {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    Vec3 t = Vec3::Zero();

    Vec3 apply(const Vec3& x) const { return R * x + t; }
    Pose inverse() const { return {R.transpose(), Vec3(-(R.transpose() * t))}; }
    Pose operator*(const Pose& o) const { return {R * o.R, Vec3(R * o.t + t)}; }

    // exp of a (v, w) twist, Rodrigues for the rotation part
    static Pose exp(const Vec6& xi);
    Eigen::Matrix4d matrix() const;
    static Pose from_matrix(const Eigen::Matrix4d& m);
    static Pose from_quat(double qx, double qy, double qz, double qw, const Vec3& t);
};

struct CameraIntrinsics {
    double fx = 0, fy = 0, cx = 0, cy = 0;
    int width = 0, height = 0;
    double depth_scale = 5000.0;  // depth-image units per meter

    bool valid() const {
        return fx > 0 && fy > 0 && cx > 0 && cx < width && cy > 0 && cy < height;
    }
    Vec2 project(const Vec3& pc) const {
        return {fx * pc.x() / pc.z() + cx, fy * pc.y() / pc.z() + cy};
    }
    Vec3 backproject(double u, double v, double z) const {
        return {(u - cx) / fx * z, (v - cy) / fy * z, z};
    }
    bool inside(const Vec2& px, double margin = 0.0) const {
        return px.x() >= margin && px.y() >= margin && px.x() <= width - 1 - margin &&
               px.y() <= height - 1 - margin;
    }
};

struct Frame {
    cv::Mat color;   // CV_8UC3, BGR as loaded by OpenCV
    cv::Mat depth;   // CV_32F, meters, 0 = no measurement
    Pose pose;       // world -> camera
    double timestamp = 0;
    double blurriness = -1;  // filled by keyframe selection
    int id = -1;

    // caches for the optimizer, built on demand
    cv::Mat gray;          // CV_32F in [0,1]
    std::vector<cv::Mat> rgb;  // 3 x CV_32F in [0,1]
    void build_caches();
};

struct FrameSet {
    std::vector<Frame> frames;
    CameraIntrinsics intrinsics;
};

/// Bilinear sample of a CV_32F image; caller guarantees 0<=x<=w-1, 0<=y<=h-1.
double sample_bilinear(const cv::Mat& img, double x, double y);
/// Gradient of the bilinear interpolant at (x, y); exact for the interpolated surface.
Vec2 sample_gradient(const cv::Mat& img, double x, double y);
/// Bilinear RGB sample of an 8-bit BGR image, returned as RGB in [0,1].
Vec3 sample_color(const cv::Mat& bgr8, double x, double y);

}  // namespace pl
