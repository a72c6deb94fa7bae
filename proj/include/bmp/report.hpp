#pragma once

// Verification reports and their JSON form.

#include <chrono>
#include <ctime>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bmp {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Where a property failed and the exact values that witness it.
struct Counterexample {
  json location = json::object();
  json values = json::object();
};

struct PropertyReport {
  std::string property;
  std::string range;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  double elapsed_seconds = 0.0;
  std::vector<std::string> notes;

  void fail(json location, json values) {
    if (!passed) return;  // keep the first witness
    passed = false;
    counterexample = Counterexample{std::move(location), std::move(values)};
  }
};

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline void to_json(json& j, const Counterexample& c) { j = json{{"location", c.location}, {"values", c.values}}; }
inline void from_json(const json& j, Counterexample& c) {
  c.location = j.at("location");
  c.values = j.at("values");
}

inline void to_json(json& j, const PropertyReport& r) {
  j = json{{"kind", "property"},
           {"property", r.property},
           {"range", r.range},
           {"verdict", r.passed ? "pass" : "fail"},
           {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
           {"elapsed_seconds", r.elapsed_seconds},
           {"notes", r.notes}};
}

inline void from_json(const json& j, PropertyReport& r) {
  r.property = j.at("property").get<std::string>();
  r.range = j.at("range").get<std::string>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("bad verdict: " + verdict);
  r.passed = verdict == "pass";
  if (j.at("counterexample").is_null())
    r.counterexample.reset();
  else
    r.counterexample = j.at("counterexample").get<Counterexample>();
  if (!r.passed && !r.counterexample) throw std::invalid_argument("failed report without counterexample");
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.notes = j.value("notes", std::vector<std::string>{});
}

}  // namespace bmp
