#include "posflow/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "posflow/errors.hpp"

namespace posflow {

double Vector3::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool Vector3::finite() const {
  return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

EulerOrder eulerOrderFromString(std::string_view order) {
  if (order == "XYZ") return EulerOrder::XYZ;
  if (order == "XZY") return EulerOrder::XZY;
  if (order == "YXZ") return EulerOrder::YXZ;
  if (order == "YZX") return EulerOrder::YZX;
  if (order == "ZXY") return EulerOrder::ZXY;
  if (order == "ZYX") return EulerOrder::ZYX;
  throw PositioningError("unknown Euler order '" + std::string(order) + "'");
}

Quaternion Quaternion::fromAxisAngle(const Vector3& axis, double angleRad) {
  const double n = axis.norm();
  if (n == 0.0) return identity();
  const double half = angleRad * 0.5;
  const double s = std::sin(half) / n;
  return {axis.x * s, axis.y * s, axis.z * s, std::cos(half)};
}

namespace {

Quaternion axisQuat(char axis, double angle) {
  switch (axis) {
    case 'X': return Quaternion::fromAxisAngle({1, 0, 0}, angle);
    case 'Y': return Quaternion::fromAxisAngle({0, 1, 0}, angle);
    default:  return Quaternion::fromAxisAngle({0, 0, 1}, angle);
  }
}

const char* orderLetters(EulerOrder order) {
  switch (order) {
    case EulerOrder::XYZ: return "XYZ";
    case EulerOrder::XZY: return "XZY";
    case EulerOrder::YXZ: return "YXZ";
    case EulerOrder::YZX: return "YZX";
    case EulerOrder::ZXY: return "ZXY";
    default:              return "ZYX";
  }
}

double angleFor(char axis, const EulerAngles& e) {
  return axis == 'X' ? e.x : (axis == 'Y' ? e.y : e.z);
}

}  // namespace

Quaternion Quaternion::fromEuler(const EulerAngles& e) {
  const char* letters = orderLetters(e.order);
  Quaternion q = axisQuat(letters[0], angleFor(letters[0], e)) *
                 axisQuat(letters[1], angleFor(letters[1], e));
  return (q * axisQuat(letters[2], angleFor(letters[2], e))).normalized();
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {
      w * o.x + x * o.w + y * o.z - z * o.y,
      w * o.y - x * o.z + y * o.w + z * o.x,
      w * o.z + x * o.y - y * o.x + z * o.w,
      w * o.w - x * o.x - y * o.y - z * o.z,
  };
}

double Quaternion::norm() const { return std::sqrt(x * x + y * y + z * z + w * w); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  if (n == 0.0) return identity();
  return {x / n, y / n, z / n, w / n};
}

Vector3 Quaternion::rotate(const Vector3& v) const {
  // v' = v + 2w (q x v) + 2 q x (q x v)
  const Vector3 qv{x, y, z};
  const Vector3 t{2.0 * (qv.y * v.z - qv.z * v.y), 2.0 * (qv.z * v.x - qv.x * v.z),
                  2.0 * (qv.x * v.y - qv.y * v.x)};
  return {v.x + w * t.x + (qv.y * t.z - qv.z * t.y),
          v.y + w * t.y + (qv.z * t.x - qv.x * t.z),
          v.z + w * t.z + (qv.x * t.y - qv.y * t.x)};
}

namespace {

struct RotMatrix {
  double m11, m12, m13, m21, m22, m23, m31, m32, m33;
};

RotMatrix toRotMatrix(const Quaternion& qIn) {
  const Quaternion q = qIn.normalized();
  const double x = q.x, y = q.y, z = q.z, w = q.w;
  return {1 - 2 * (y * y + z * z), 2 * (x * y - z * w),     2 * (x * z + y * w),
          2 * (x * y + z * w),     1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
          2 * (x * z - y * w),     2 * (y * z + x * w),     1 - 2 * (x * x + y * y)};
}

double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

constexpr double kGimbal = 0.9999999;

}  // namespace

EulerAngles Quaternion::toEuler(EulerOrder order) const {
  const RotMatrix r = toRotMatrix(*this);
  EulerAngles e;
  e.order = order;
  switch (order) {
    case EulerOrder::XYZ:
      e.y = std::asin(clamp1(r.m13));
      if (std::abs(r.m13) < kGimbal) {
        e.x = std::atan2(-r.m23, r.m33);
        e.z = std::atan2(-r.m12, r.m11);
      } else {
        e.x = std::atan2(r.m32, r.m22);
        e.z = 0.0;
      }
      break;
    case EulerOrder::YXZ:
      e.x = std::asin(-clamp1(r.m23));
      if (std::abs(r.m23) < kGimbal) {
        e.y = std::atan2(r.m13, r.m33);
        e.z = std::atan2(r.m21, r.m22);
      } else {
        e.y = std::atan2(-r.m31, r.m11);
        e.z = 0.0;
      }
      break;
    case EulerOrder::ZXY:
      e.x = std::asin(clamp1(r.m32));
      if (std::abs(r.m32) < kGimbal) {
        e.y = std::atan2(-r.m31, r.m33);
        e.z = std::atan2(-r.m12, r.m22);
      } else {
        e.y = 0.0;
        e.z = std::atan2(r.m21, r.m11);
      }
      break;
    case EulerOrder::ZYX:
      e.y = std::asin(-clamp1(r.m31));
      if (std::abs(r.m31) < kGimbal) {
        e.x = std::atan2(r.m32, r.m33);
        e.z = std::atan2(r.m21, r.m11);
      } else {
        e.x = 0.0;
        e.z = std::atan2(-r.m12, r.m22);
      }
      break;
    case EulerOrder::YZX:
      e.z = std::asin(clamp1(r.m21));
      if (std::abs(r.m21) < kGimbal) {
        e.x = std::atan2(-r.m23, r.m22);
        e.y = std::atan2(-r.m31, r.m11);
      } else {
        e.x = 0.0;
        e.y = std::atan2(r.m13, r.m33);
      }
      break;
    case EulerOrder::XZY:
      e.z = std::asin(-clamp1(r.m12));
      if (std::abs(r.m12) < kGimbal) {
        e.x = std::atan2(r.m32, r.m22);
        e.y = std::atan2(r.m13, r.m11);
      } else {
        e.x = std::atan2(-r.m23, r.m33);
        e.y = 0.0;
      }
      break;
  }
  return e;
}

std::pair<Vector3, double> Quaternion::toAxisAngle() const {
  const Quaternion q = normalized();
  const double angle = 2.0 * std::acos(clamp1(q.w));
  const double s = std::sqrt(std::max(0.0, 1.0 - q.w * q.w));
  if (s < 1e-12) return {{1, 0, 0}, 0.0};
  return {{q.x / s, q.y / s, q.z / s}, angle};
}

Quaternion orientationFromEuler(const Vector3& angles, EulerOrder order,
                                const Unit& angleUnit) {
  if (angleUnit.baseName() != "angle") {
    throw UnitError("orientationFromEuler requires an angle unit, got '" +
                    angleUnit.name() + "'");
  }
  const Unit rad = AngleUnit::radian();
  return Quaternion::fromEuler({convert(angles.x, angleUnit, rad),
                                convert(angles.y, angleUnit, rad),
                                convert(angles.z, angleUnit, rad), order});
}

Matrix3 Matrix3::inverse() const {
  const auto& a = m;
  const double det = a[0] * (a[4] * a[8] - a[5] * a[7]) -
                     a[1] * (a[3] * a[8] - a[5] * a[6]) +
                     a[2] * (a[3] * a[7] - a[4] * a[6]);
  if (std::abs(det) < 1e-12) throw SpaceError("singular 3x3 matrix");
  Matrix3 out;
  out.m = {(a[4] * a[8] - a[5] * a[7]) / det, (a[2] * a[7] - a[1] * a[8]) / det,
           (a[1] * a[5] - a[2] * a[4]) / det, (a[5] * a[6] - a[3] * a[8]) / det,
           (a[0] * a[8] - a[2] * a[6]) / det, (a[2] * a[3] - a[0] * a[5]) / det,
           (a[3] * a[7] - a[4] * a[6]) / det, (a[1] * a[6] - a[0] * a[7]) / det,
           (a[0] * a[4] - a[1] * a[3]) / det};
  return out;
}

Matrix3 homographyFromPoints(const std::array<Point2, 4>& src,
                             const std::array<Point2, 4>& dst) {
  // Direct linear transform with h33 fixed to 1: two equations per point pair.
  Eigen::Matrix<double, 8, 8> a = Eigen::Matrix<double, 8, 8>::Zero();
  Eigen::Matrix<double, 8, 1> b;
  for (int i = 0; i < 4; ++i) {
    const double x = src[i].x, y = src[i].y;
    const double u = dst[i].x, v = dst[i].y;
    a.row(2 * i) << x, y, 1, 0, 0, 0, -u * x, -u * y;
    a.row(2 * i + 1) << 0, 0, 0, x, y, 1, -v * x, -v * y;
    b(2 * i) = u;
    b(2 * i + 1) = v;
  }
  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 8, 8>> qr(a);
  if (qr.rank() < 8) throw SpaceError("homography: degenerate correspondences");
  const Eigen::Matrix<double, 8, 1> h = qr.solve(b);
  Matrix3 out;
  out.m = {h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), 1.0};
  return out;
}

Point2 applyHomography(const Matrix3& h, const Point2& p) {
  const double u = h.m[0] * p.x + h.m[1] * p.y + h.m[2];
  const double v = h.m[3] * p.x + h.m[4] * p.y + h.m[5];
  const double w = h.m[6] * p.x + h.m[7] * p.y + h.m[8];
  if (std::abs(w) < 1e-12) throw SpaceError("homography maps point to infinity");
  return {u / w, v / w};
}

AbsolutePosition AbsolutePosition::absolute2D(double x, double y, Unit lengthUnit) {
  AbsolutePosition p;
  p.kind = PositionKind::Absolute2D;
  p.vector = {x, y, 0.0};
  p.unit = std::move(lengthUnit);
  return p;
}

AbsolutePosition AbsolutePosition::absolute3D(double x, double y, double z,
                                              Unit lengthUnit) {
  AbsolutePosition p;
  p.kind = PositionKind::Absolute3D;
  p.vector = {x, y, z};
  p.unit = std::move(lengthUnit);
  return p;
}

AbsolutePosition AbsolutePosition::geographical(double latitudeDeg, double longitudeDeg,
                                                double elevationM) {
  AbsolutePosition p;
  p.kind = PositionKind::Geographical;
  p.vector = {latitudeDeg, longitudeDeg, elevationM};
  p.unit = LengthUnit::meter();
  return p;
}

}  // namespace posflow
