#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "posflow/geometry.hpp"

namespace posflow {

/// Random UUIDv4 text. Seedable for reproducible runs.
std::string generateUid();
void seedUidGenerator(std::uint64_t seed);

class ReferenceSpace;

/// Anything relevant to positioning: a tracked actor, a tracking sensor or a
/// landmark. The stored absolute position is always kept in the global
/// reference space; use setPosition/getPosition with a space to transform.
class DataObject {
 public:
  DataObject() : uid_(generateUid()) {}
  explicit DataObject(std::string uid) : uid_(std::move(uid)) {}
  virtual ~DataObject() = default;

  const std::string& uid() const { return uid_; }
  void setUid(std::string uid) { uid_ = std::move(uid); }

  const std::optional<std::string>& displayName() const { return displayName_; }
  void setDisplayName(std::string name) { displayName_ = std::move(name); }

  const std::optional<std::string>& parentUID() const { return parentUID_; }
  void setParentUID(std::string uid) { parentUID_ = std::move(uid); }

  std::int64_t createdTimestamp() const { return createdTimestamp_; }
  void setCreatedTimestamp(std::int64_t t) { createdTimestamp_ = t; }

  /// Stores the position, transformed into the global space when a reference
  /// space is given. Throws SpaceError when the space chain dangles.
  void setPosition(const AbsolutePosition& position,
                   const ReferenceSpace* space = nullptr);

  /// Last known position in the global space, or transformed into the
  /// requested space. Empty when no position was ever set.
  std::optional<AbsolutePosition> getPosition(const ReferenceSpace* space = nullptr) const;

  bool hasPosition() const { return position_.has_value(); }
  void clearPosition() { position_.reset(); }

  /// Adds a relative position; a second value towards the same reference
  /// object with the same value tag replaces the previous one.
  void addRelativePosition(const RelativePosition& relative);
  const std::vector<RelativePosition>& relativePositions() const { return relative_; }

  /// Serialization/service type name of the concrete class.
  virtual std::string typeName() const { return "DataObject"; }
  virtual std::shared_ptr<DataObject> clone() const;

 protected:
  void copyBaseTo(DataObject& out) const;

 private:
  friend class Serializer;
  std::string uid_;
  std::optional<std::string> displayName_;
  std::optional<std::string> parentUID_;
  std::int64_t createdTimestamp_ = 0;
  std::optional<AbsolutePosition> position_;  // always global
  std::vector<RelativePosition> relative_;
};

using DataObjectPtr = std::shared_ptr<DataObject>;

/// A data object describing an affine + perspective + unit transform
/// relative to a parent space. The chain of parents terminates at the
/// model's global space.
class ReferenceSpace : public DataObject {
 public:
  ReferenceSpace() = default;
  explicit ReferenceSpace(std::shared_ptr<const ReferenceSpace> parent);

  ReferenceSpace& unit(const Unit& u);
  ReferenceSpace& translation(double x, double y, double z = 0.0);
  ReferenceSpace& rotation(const Quaternion& q);
  ReferenceSpace& rotation(double x, double y, double z, const Unit& angleUnit,
                           EulerOrder order = EulerOrder::XYZ);
  ReferenceSpace& scale(double x, double y, double z = 0.0);
  ReferenceSpace& perspective(const Matrix3& homography);

  const Unit& lengthUnit() const { return unit_; }
  const Vector3& translationVector() const { return translation_; }
  const Quaternion& rotationQuaternion() const { return rotation_; }
  const Vector3& scaleVector() const { return scale_; }
  const std::optional<Matrix3>& perspectiveMatrix() const { return perspective_; }

  const std::shared_ptr<const ReferenceSpace>& parent() const { return parent_; }
  void setParent(std::shared_ptr<const ReferenceSpace> parent);

  std::string typeName() const override { return "ReferenceSpace"; }
  std::shared_ptr<DataObject> clone() const override;

 private:
  friend class Serializer;
  std::shared_ptr<const ReferenceSpace> parent_;
  Unit unit_ = LengthUnit::meter();
  Vector3 translation_{0, 0, 0};
  Quaternion rotation_ = Quaternion::identity();
  Vector3 scale_{1, 1, 1};
  std::optional<Matrix3> perspective_;
};

using ReferenceSpacePtr = std::shared_ptr<ReferenceSpace>;

/// Transforms a position expressed in `space` up the parent chain into the
/// global space. Translation applies to the position, rotation to position,
/// orientation and angular velocity, scale to position and linear velocity
/// (zero scale components act as 1), and the position unit is converted to
/// each parent's unit. Throws SpaceError on a dangling parent chain.
AbsolutePosition transformToGlobal(const AbsolutePosition& position,
                                   const ReferenceSpace& space);

/// Exact inverse of transformToGlobal for invertible spaces.
AbsolutePosition transformFromGlobal(const AbsolutePosition& position,
                                     const ReferenceSpace& space);

}  // namespace posflow
