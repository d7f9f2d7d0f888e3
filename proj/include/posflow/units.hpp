#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posflow/errors.hpp"

namespace posflow {

/// A decimal (SI) unit prefix such as milli (1e-3) or kilo (1e3).
struct UnitPrefix {
  std::string name;    // "milli"
  std::string symbol;  // "m"
  double magnitude;    // 1e-3

  /// Full SI decimal prefix table, yotta down to yocto.
  static std::span<const UnitPrefix> decimal();
  static const UnitPrefix& milli();
  static const UnitPrefix& micro();
  static const UnitPrefix& nano();
  static const UnitPrefix& kilo();
  static const UnitPrefix& centi();
};

enum class PrefixSupport { None, Decimal };

/// Conversion rule towards another unit of the same base dimension,
/// e.g. minute = {magnitude: 60, target: "s"}.
struct UnitDefinition {
  double magnitude;
  std::string targetAlias;
};

struct UnitSpec {
  std::string name;
  std::string baseName;  // dimension key, e.g. "time"
  std::vector<std::string> aliases;
  PrefixSupport prefixSupport = PrefixSupport::None;
  std::vector<UnitDefinition> definitions;  // empty => canonical unit of baseName
};

/// An immutable measurement unit. Copies share the underlying definition.
///
/// Every unit carries an eagerly resolved magnitude towards the canonical
/// unit of its base dimension, so conversions are a single multiply/divide.
class Unit {
 public:
  Unit() = default;  // invalid unit

  const std::string& name() const;
  const std::string& baseName() const;
  const std::vector<std::string>& aliases() const;
  PrefixSupport prefixSupport() const;
  /// Factor converting one of this unit into the canonical unit of baseName.
  double magnitude() const;

  /// Prefixed variant, e.g. second.specifier(UnitPrefix::milli()) -> millisecond.
  /// Throws UnitError when the unit does not accept prefixes.
  Unit specifier(const UnitPrefix& prefix) const;

  bool valid() const { return data_ != nullptr; }
  explicit operator bool() const { return valid(); }

  friend bool operator==(const Unit& a, const Unit& b);
  friend bool operator!=(const Unit& a, const Unit& b) { return !(a == b); }

 private:
  friend class UnitRegistry;
  struct Data {
    std::string name;
    std::string baseName;
    std::vector<std::string> aliases;
    PrefixSupport prefixSupport = PrefixSupport::None;
    double magnitude = 1.0;
  };
  explicit Unit(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A unit composed of powered base units, e.g. rad/s = radian^1 * second^-1.
class DerivedUnit {
 public:
  struct Component {
    Unit unit;
    int power;
  };

  DerivedUnit(std::string name, std::string baseName,
              std::vector<std::string> aliases = {});

  DerivedUnit& addUnit(const Unit& unit, int power);

  const std::string& name() const { return name_; }
  const std::string& baseName() const { return baseName_; }
  const std::vector<std::string>& aliases() const { return aliases_; }
  const std::vector<Component>& components() const { return components_; }

  /// Product of component magnitudes raised to their powers.
  double magnitude() const;

  /// Variant with matching-dimension components replaced, e.g.
  /// radPerSecond.swap({degree}, "degree per second") -> deg/s.
  /// Each replacement must share a baseName with exactly one component.
  DerivedUnit swap(const std::vector<Unit>& replacements, std::string name,
                   std::vector<std::string> aliases = {}) const;

 private:
  std::string name_;
  std::string baseName_;
  std::vector<std::string> aliases_;
  std::vector<Component> components_;
};

/// Registry of units keyed by name and alias, with on-the-fly resolution of
/// decimal prefixes ("ms", "millisecond"). Registration is a single-threaded
/// build phase; lookups are safe to share across threads afterwards.
class UnitRegistry {
 public:
  /// Registers a unit. Definition chains are resolved eagerly, so any
  /// referenced target alias must already be registered.
  /// Throws UnitError on duplicate names/aliases or unresolvable definitions.
  Unit define(const UnitSpec& spec);

  /// Resolves a name or alias, including prefixed forms when the base unit
  /// supports them. Returns nullopt when nothing matches.
  std::optional<Unit> find(std::string_view nameOrAlias) const;

  /// Like find() but throws UnitError naming the unknown unit.
  Unit require(std::string_view nameOrAlias) const;

  /// Process-wide registry pre-populated with the built-in units.
  static UnitRegistry& global();

 private:
  std::shared_ptr<const Unit::Data> lookupExact(std::string_view key) const;
  std::vector<std::pair<std::string, std::shared_ptr<const Unit::Data>>> entries_;
};

/// Converts a value between two units of the same base dimension.
/// Throws UnitError on dimension mismatch.
double convert(double value, const Unit& from, const Unit& to);
double convert(double value, const DerivedUnit& from, const DerivedUnit& to);

// Built-in units, registered in UnitRegistry::global() on first use.
namespace LengthUnit {
Unit meter();
Unit centimeter();
Unit millimeter();
Unit kilometer();
}  // namespace LengthUnit

namespace TimeUnit {
Unit second();
Unit millisecond();
Unit microsecond();
Unit minute();
Unit hour();
}  // namespace TimeUnit

namespace AngleUnit {
Unit radian();
Unit degree();
}  // namespace AngleUnit

namespace VelocityUnit {
DerivedUnit meterPerSecond();
DerivedUnit radianPerSecond();
DerivedUnit degreePerSecond();
}  // namespace VelocityUnit

}  // namespace posflow
