#pragma once

#include "toric/kstability.hpp"

#include <json.hpp>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace toric::cli {

using Json = nlohmann::ordered_json;

struct InputDocument {
  Json echo;
  bool polytope_mode = false;
  std::shared_ptr<const Fan> fan;
  std::optional<std::vector<Rational>> divisor;  // always set in polytope mode
  std::vector<RationalVector> valuations;
  std::int64_t m_lo = 1;
  std::int64_t m_hi = 4;
};

/// Structural parsing only; the fan is not validated here. Throws Parse.
InputDocument parse_input(const Json& doc);
InputDocument load_input(const std::filesystem::path& path);

/// Divisor named by the input, or -K_X when none is given.
ToricDivisor chosen_divisor(const InputDocument& in);

/// Fan-mode serialization; parse_input(fan_to_json(...)) reproduces the fan.
Json fan_to_json(const Fan& fan, const std::optional<std::vector<Rational>>& divisor);

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const LatticeVector& v);
Json to_json(const FanDiagnostics& d);
Json to_json(const Certificate& c);
Json to_json(const ThresholdReport& r);
Json to_json(const KStabilityReport& r);

/// Two-space indented dump with a trailing newline.
std::string render(const Json& doc);

}  // namespace toric::cli
