#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "posflow/units.hpp"

namespace posflow {

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vector3& operator+=(const Vector3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
  bool finite() const;
};

enum class EulerOrder { XYZ, XZY, YXZ, YZX, ZXY, ZYX };

EulerOrder eulerOrderFromString(std::string_view order);

/// Euler angles about the X, Y and Z axes, applied intrinsically in the
/// sequence named by `order` (e.g. ZXY applies Z first). Angles in radians.
struct EulerAngles {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  EulerOrder order = EulerOrder::XYZ;
};

/// Unit quaternion orientation (x, y, z, w).
struct Quaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 1.0;

  static Quaternion identity() { return {}; }
  static Quaternion fromAxisAngle(const Vector3& axis, double angleRad);
  static Quaternion fromEuler(const EulerAngles& angles);

  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Quaternion conjugate() const { return {-x, -y, -z, w}; }
  Quaternion normalized() const;
  double norm() const;
  Vector3 rotate(const Vector3& v) const;

  EulerAngles toEuler(EulerOrder order) const;
  /// Axis-angle form; identity yields axis (1,0,0), angle 0.
  std::pair<Vector3, double> toAxisAngle() const;
};

Quaternion orientationFromEuler(const Vector3& angles, EulerOrder order,
                                const Unit& angleUnit);

/// Row-major 3x3 matrix, used for perspective (homography) transforms.
struct Matrix3 {
  std::array<double, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};

  double& at(int row, int col) { return m[row * 3 + col]; }
  double at(int row, int col) const { return m[row * 3 + col]; }
  static Matrix3 identity() { return {}; }
  Matrix3 inverse() const;  // throws SpaceError when singular
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Homography mapping each of the four source points onto its destination
/// point. No three source points may be collinear.
/// Throws SpaceError on degenerate correspondences.
Matrix3 homographyFromPoints(const std::array<Point2, 4>& src,
                             const std::array<Point2, 4>& dst);

/// Applies a homography with projective division.
Point2 applyHomography(const Matrix3& h, const Point2& p);

/// Linear velocity in the object's local frame, fixed unit m/s.
struct LinearVelocity : Vector3 {};

/// Angular velocity in the object's local frame, fixed unit rad/s.
struct AngularVelocity : Vector3 {};

enum class PositionKind { Absolute2D, Absolute3D, Geographical };

/// Timestamped, accuracy-tagged absolute position. 2D positions keep z = 0;
/// geographical positions store (latitude deg, longitude deg, elevation m).
struct AbsolutePosition {
  PositionKind kind = PositionKind::Absolute3D;
  Vector3 vector;
  std::int64_t timestamp = 0;  // microseconds since epoch
  Unit unit;                   // length unit of the position vector
  std::optional<double> accuracy;
  std::optional<Unit> accuracyUnit;
  std::optional<Quaternion> orientation;
  std::optional<LinearVelocity> linearVelocity;
  std::optional<AngularVelocity> angularVelocity;
  std::optional<std::string> referenceSpaceUID;

  static AbsolutePosition absolute2D(double x, double y, Unit lengthUnit = LengthUnit::meter());
  static AbsolutePosition absolute3D(double x, double y, double z,
                                     Unit lengthUnit = LengthUnit::meter());
  static AbsolutePosition geographical(double latitudeDeg, double longitudeDeg,
                                       double elevationM = 0.0);

  Vector3 toVector3() const { return vector; }
};

/// Relative position values: a distance, bearing angle or speed towards a
/// reference object. The tag fixes the unit dimension.
struct RelativeDistance {
  double value = 0.0;
  Unit unit;  // length
};
struct RelativeAngle {
  double value = 0.0;
  Unit unit;  // angle
};
struct RelativeVelocity {
  double value = 0.0;  // fixed m/s
};

using RelativeValue = std::variant<RelativeDistance, RelativeAngle, RelativeVelocity>;

struct RelativePosition {
  std::int64_t timestamp = 0;
  std::optional<double> accuracy;
  std::optional<Unit> accuracyUnit;
  std::string referenceObjectUID;
  RelativeValue value;

  /// Tag index used for the one-relative-position-per-(object, tag) rule.
  std::size_t valueTag() const { return value.index(); }
};

}  // namespace posflow
