#include "posflow/units.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace posflow {

namespace {

const std::vector<UnitPrefix>& prefixTable() {
  static const std::vector<UnitPrefix> table = {
      {"yotta", "Y", 1e24},  {"zetta", "Z", 1e21},  {"exa", "E", 1e18},
      {"peta", "P", 1e15},   {"tera", "T", 1e12},   {"giga", "G", 1e9},
      {"mega", "M", 1e6},    {"kilo", "k", 1e3},    {"hecto", "h", 1e2},
      {"deca", "da", 1e1},   {"deci", "d", 1e-1},   {"centi", "c", 1e-2},
      {"milli", "m", 1e-3},  {"micro", "u", 1e-6},  {"nano", "n", 1e-9},
      {"pico", "p", 1e-12},  {"femto", "f", 1e-15}, {"atto", "a", 1e-18},
      {"zepto", "z", 1e-21}, {"yocto", "y", 1e-24},
  };
  return table;
}

}  // namespace

std::span<const UnitPrefix> UnitPrefix::decimal() { return prefixTable(); }

const UnitPrefix& UnitPrefix::milli() { return prefixTable()[12]; }
const UnitPrefix& UnitPrefix::micro() { return prefixTable()[13]; }
const UnitPrefix& UnitPrefix::nano() { return prefixTable()[14]; }
const UnitPrefix& UnitPrefix::kilo() { return prefixTable()[7]; }
const UnitPrefix& UnitPrefix::centi() { return prefixTable()[11]; }

const std::string& Unit::name() const { return data_->name; }
const std::string& Unit::baseName() const { return data_->baseName; }
const std::vector<std::string>& Unit::aliases() const { return data_->aliases; }
PrefixSupport Unit::prefixSupport() const { return data_->prefixSupport; }
double Unit::magnitude() const { return data_->magnitude; }

bool operator==(const Unit& a, const Unit& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->name == b.data_->name && a.data_->baseName == b.data_->baseName;
}

Unit Unit::specifier(const UnitPrefix& prefix) const {
  if (!valid()) throw UnitError("specifier on invalid unit");
  if (prefix.magnitude <= 0.0) throw UnitError("prefix magnitude must be > 0");
  if (prefix.magnitude == 1.0) return *this;
  if (data_->prefixSupport != PrefixSupport::Decimal) {
    throw UnitError("unit '" + data_->name + "' does not support prefixes");
  }
  auto d = std::make_shared<Data>();
  d->name = prefix.name + data_->name;
  d->baseName = data_->baseName;
  d->prefixSupport = PrefixSupport::None;  // no stacked prefixes
  d->magnitude = prefix.magnitude * data_->magnitude;
  for (const auto& alias : data_->aliases) d->aliases.push_back(prefix.symbol + alias);
  return Unit(std::move(d));
}

DerivedUnit::DerivedUnit(std::string name, std::string baseName,
                         std::vector<std::string> aliases)
    : name_(std::move(name)), baseName_(std::move(baseName)), aliases_(std::move(aliases)) {}

DerivedUnit& DerivedUnit::addUnit(const Unit& unit, int power) {
  if (!unit.valid()) throw UnitError("invalid component unit in '" + name_ + "'");
  if (power == 0) throw UnitError("component power must be non-zero in '" + name_ + "'");
  components_.push_back({unit, power});
  return *this;
}

double DerivedUnit::magnitude() const {
  double m = 1.0;
  for (const auto& c : components_) m *= std::pow(c.unit.magnitude(), c.power);
  return m;
}

DerivedUnit DerivedUnit::swap(const std::vector<Unit>& replacements, std::string name,
                              std::vector<std::string> aliases) const {
  DerivedUnit out(std::move(name), baseName_, std::move(aliases));
  out.components_ = components_;
  for (const auto& r : replacements) {
    size_t matches = 0;
    size_t index = 0;
    for (size_t i = 0; i < out.components_.size(); ++i) {
      if (out.components_[i].unit.baseName() == r.baseName()) {
        ++matches;
        index = i;
      }
    }
    if (matches != 1) {
      throw UnitError("swap: replacement '" + r.name() + "' matches " +
                      std::to_string(matches) + " components of '" + name_ + "'");
    }
    out.components_[index].unit = r;
  }
  return out;
}

Unit UnitRegistry::define(const UnitSpec& spec) {
  if (spec.name.empty()) throw UnitError("unit name must not be empty");
  if (spec.baseName.empty()) throw UnitError("unit '" + spec.name + "' has no baseName");

  std::vector<std::string> keys;
  keys.push_back(spec.name);
  keys.insert(keys.end(), spec.aliases.begin(), spec.aliases.end());
  for (const auto& key : keys) {
    if (lookupExact(key)) {
      throw UnitError("unit name or alias '" + key + "' is already registered");
    }
  }

  auto d = std::make_shared<Unit::Data>();
  d->name = spec.name;
  d->baseName = spec.baseName;
  d->aliases = spec.aliases;
  d->prefixSupport = spec.prefixSupport;

  if (spec.definitions.empty()) {
    d->magnitude = 1.0;  // canonical unit of its dimension
  } else {
    // Resolve the chain eagerly through the first definition.
    const auto& def = spec.definitions.front();
    auto target = find(def.targetAlias);
    if (!target) {
      throw UnitError("unit '" + spec.name + "' defined against unknown unit '" +
                      def.targetAlias + "'");
    }
    if (target->baseName() != spec.baseName) {
      throw UnitError("unit '" + spec.name + "' definition targets dimension '" +
                      target->baseName() + "', expected '" + spec.baseName + "'");
    }
    d->magnitude = def.magnitude * target->magnitude();
  }

  for (const auto& key : keys) entries_.emplace_back(key, d);
  return Unit(d);
}

std::shared_ptr<const Unit::Data> UnitRegistry::lookupExact(std::string_view key) const {
  for (const auto& [name, data] : entries_) {
    if (name == key) return data;
  }
  return nullptr;
}

std::optional<Unit> UnitRegistry::find(std::string_view nameOrAlias) const {
  if (auto d = lookupExact(nameOrAlias)) return Unit(std::move(d));

  // Prefixed forms: full prefix names first, then symbols.
  for (const auto& p : prefixTable()) {
    if (nameOrAlias.size() > p.name.size() && nameOrAlias.starts_with(p.name)) {
      if (auto d = lookupExact(nameOrAlias.substr(p.name.size()))) {
        if (d->prefixSupport == PrefixSupport::Decimal) return Unit(d).specifier(p);
      }
    }
  }
  for (const auto& p : prefixTable()) {
    if (nameOrAlias.size() > p.symbol.size() && nameOrAlias.starts_with(p.symbol)) {
      if (auto d = lookupExact(nameOrAlias.substr(p.symbol.size()))) {
        if (d->prefixSupport == PrefixSupport::Decimal) return Unit(d).specifier(p);
      }
    }
  }
  return std::nullopt;
}

Unit UnitRegistry::require(std::string_view nameOrAlias) const {
  auto u = find(nameOrAlias);
  if (!u) throw UnitError("unknown unit '" + std::string(nameOrAlias) + "'");
  return *u;
}

namespace {

void registerBuiltins(UnitRegistry& r) {
  r.define({"meter", "length", {"m", "meters", "metre"}, PrefixSupport::Decimal, {}});
  r.define({"second", "time", {"s", "sec", "seconds"}, PrefixSupport::Decimal, {}});
  r.define({"minute", "time", {"min", "minutes"}, PrefixSupport::None, {{60.0, "s"}}});
  r.define({"hour", "time", {"h", "hours"}, PrefixSupport::None, {{60.0, "minute"}}});
  r.define({"radian", "angle", {"rad", "radians"}, PrefixSupport::None, {}});
  r.define({"degree", "angle", {"deg", "degrees"}, PrefixSupport::None,
            {{3.14159265358979323846 / 180.0, "rad"}}});
}

}  // namespace

UnitRegistry& UnitRegistry::global() {
  static UnitRegistry registry = [] {
    UnitRegistry r;
    registerBuiltins(r);
    return r;
  }();
  return registry;
}

double convert(double value, const Unit& from, const Unit& to) {
  if (!from.valid() || !to.valid()) throw UnitError("convert with invalid unit");
  if (from.baseName() != to.baseName()) {
    throw UnitError("incompatible units '" + from.name() + "' (" + from.baseName() +
                    ") and '" + to.name() + "' (" + to.baseName() + ")");
  }
  if (from == to) return value;
  return value * (from.magnitude() / to.magnitude());
}

double convert(double value, const DerivedUnit& from, const DerivedUnit& to) {
  if (from.baseName() != to.baseName()) {
    throw UnitError("incompatible derived units '" + from.name() + "' and '" +
                    to.name() + "'");
  }
  return value * (from.magnitude() / to.magnitude());
}

namespace LengthUnit {
Unit meter() { return UnitRegistry::global().require("meter"); }
Unit centimeter() { return UnitRegistry::global().require("centimeter"); }
Unit millimeter() { return UnitRegistry::global().require("millimeter"); }
Unit kilometer() { return UnitRegistry::global().require("kilometer"); }
}  // namespace LengthUnit

namespace TimeUnit {
Unit second() { return UnitRegistry::global().require("second"); }
Unit millisecond() { return UnitRegistry::global().require("millisecond"); }
Unit microsecond() { return UnitRegistry::global().require("microsecond"); }
Unit minute() { return UnitRegistry::global().require("minute"); }
Unit hour() { return UnitRegistry::global().require("hour"); }
}  // namespace TimeUnit

namespace AngleUnit {
Unit radian() { return UnitRegistry::global().require("radian"); }
Unit degree() { return UnitRegistry::global().require("degree"); }
}  // namespace AngleUnit

namespace VelocityUnit {
DerivedUnit meterPerSecond() {
  return DerivedUnit("meter per second", "linearvelocity", {"m/s"})
      .addUnit(LengthUnit::meter(), 1)
      .addUnit(TimeUnit::second(), -1);
}
DerivedUnit radianPerSecond() {
  return DerivedUnit("radian per second", "angularvelocity", {"rad/s"})
      .addUnit(AngleUnit::radian(), 1)
      .addUnit(TimeUnit::second(), -1);
}
DerivedUnit degreePerSecond() {
  return radianPerSecond().swap({AngleUnit::degree()}, "degree per second", {"deg/s"});
}
}  // namespace VelocityUnit

}  // namespace posflow
