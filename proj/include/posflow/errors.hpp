#pragma once

#include <stdexcept>
#include <string>

namespace posflow {

/// Base class for all framework errors.
class PositioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnitError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

class SpaceError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

class SerializationError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

class BuildError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

class AlgorithmError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

class ServiceError : public PositioningError {
 public:
  using PositioningError::PositioningError;
};

}  // namespace posflow
