#include "planelite/camera.hpp"

#include <cmath>
#include <opencv2/imgproc.hpp>

namespace pl {

Pose Pose::exp(const Vec6& xi) {
    Vec3 v = xi.head<3>(), w = xi.tail<3>();
    double theta = w.norm();
    Eigen::Matrix3d W;
    W << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
    Eigen::Matrix3d R, V;
    if (theta < 1e-10) {
        R = Eigen::Matrix3d::Identity() + W;
        V = Eigen::Matrix3d::Identity() + 0.5 * W;
    } else {
        double a = std::sin(theta) / theta;
        double b = (1 - std::cos(theta)) / (theta * theta);
        double c = (1 - a) / (theta * theta);
        R = Eigen::Matrix3d::Identity() + a * W + b * W * W;
        V = Eigen::Matrix3d::Identity() + b * W + c * W * W;
    }
    return {R, Vec3(V * v)};
}

Eigen::Matrix4d Pose::matrix() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = R;
    m.block<3, 1>(0, 3) = t;
    return m;
}

Pose Pose::from_matrix(const Eigen::Matrix4d& m) {
    return {m.block<3, 3>(0, 0), Vec3(m.block<3, 1>(0, 3))};
}

Pose Pose::from_quat(double qx, double qy, double qz, double qw, const Vec3& t) {
    Eigen::Quaterniond q(qw, qx, qy, qz);
    q.normalize();
    return {q.toRotationMatrix(), t};
}

void Frame::build_caches() {
    if (!gray.empty()) return;
    cv::Mat g8;
    cv::cvtColor(color, g8, cv::COLOR_BGR2GRAY);
    g8.convertTo(gray, CV_32F, 1.0 / 255.0);
    cv::Mat chans[3];
    cv::split(color, chans);
    rgb.resize(3);
    // store as RGB
    chans[2].convertTo(rgb[0], CV_32F, 1.0 / 255.0);
    chans[1].convertTo(rgb[1], CV_32F, 1.0 / 255.0);
    chans[0].convertTo(rgb[2], CV_32F, 1.0 / 255.0);
}

double sample_bilinear(const cv::Mat& img, double x, double y) {
    int x0 = std::min((int)x, img.cols - 2);
    int y0 = std::min((int)y, img.rows - 2);
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    double fx = x - x0, fy = y - y0;
    const float* r0 = img.ptr<float>(y0);
    const float* r1 = img.ptr<float>(y0 + 1);
    return (1 - fy) * ((1 - fx) * r0[x0] + fx * r0[x0 + 1]) +
           fy * ((1 - fx) * r1[x0] + fx * r1[x0 + 1]);
}

Vec2 sample_gradient(const cv::Mat& img, double x, double y) {
    int x0 = std::min((int)x, img.cols - 2);
    int y0 = std::min((int)y, img.rows - 2);
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    double fx = x - x0, fy = y - y0;
    const float* r0 = img.ptr<float>(y0);
    const float* r1 = img.ptr<float>(y0 + 1);
    double gx = (1 - fy) * (r0[x0 + 1] - r0[x0]) + fy * (r1[x0 + 1] - r1[x0]);
    double gy = (1 - fx) * (r1[x0] - r0[x0]) + fx * (r1[x0 + 1] - r0[x0 + 1]);
    return {gx, gy};
}

Vec3 sample_color(const cv::Mat& bgr8, double x, double y) {
    int x0 = std::min((int)x, bgr8.cols - 2);
    int y0 = std::min((int)y, bgr8.rows - 2);
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    double fx = x - x0, fy = y - y0;
    const cv::Vec3b* r0 = bgr8.ptr<cv::Vec3b>(y0);
    const cv::Vec3b* r1 = bgr8.ptr<cv::Vec3b>(y0 + 1);
    Vec3 out;
    for (int c = 0; c < 3; ++c) {
        double v = (1 - fy) * ((1 - fx) * r0[x0][2 - c] + fx * r0[x0 + 1][2 - c]) +
                   fy * ((1 - fx) * r1[x0][2 - c] + fx * r1[x0 + 1][2 - c]);
        out[c] = v / 255.0;
    }
    return out;
}

}  // namespace pl
