#ifndef RICCILAB_CORE_QUATERNION_HPP
#define RICCILAB_CORE_QUATERNION_HPP

#include <cmath>

namespace riccilab {

/// Real quaternion w + x i + y j + z k. Complex numbers are the y = z = 0
/// sub-case and reals the x = y = z = 0 sub-case, so a single entry type
/// covers all three scalar kinds.
struct Quat {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quat() = default;
  constexpr Quat(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quat i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quat j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quat k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quat conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quat& operator+=(const Quat& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quat& operator-=(const Quat& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
};

constexpr Quat operator+(Quat a, const Quat& b) { return a += b; }
constexpr Quat operator-(Quat a, const Quat& b) { return a -= b; }

// Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
constexpr Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quat operator*(double s, const Quat& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}
constexpr Quat operator*(const Quat& q, double s) { return s * q; }

/// Re(a b) without forming the product; symmetric in its arguments.
constexpr double re_product(const Quat& a, const Quat& b) {
  return a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
}

} // namespace riccilab

#endif
