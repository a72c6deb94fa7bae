#pragma once

// The versioned document emitted by every CLI command.

#include <string>
#include <variant>
#include <vector>

#include "bmp/exact.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/report.hpp"
#include "bmp/tfunction.hpp"

namespace bmp {

using RunResult = std::variant<PropertyReport, TValueBundle, QuadratureResult>;

struct RunReport {
  std::string command;
  json config = json::object();
  std::vector<RunResult> results;
  std::string started;
  std::string finished;

  /// Pass iff every contained property report passes and every T bundle is consistent.
  [[nodiscard]] bool passed() const {
    for (const auto& r : results) {
      if (const auto* p = std::get_if<PropertyReport>(&r); p != nullptr && !p->passed) return false;
      if (const auto* t = std::get_if<TValueBundle>(&r); t != nullptr && !t->consistent()) return false;
    }
    return true;
  }
};

inline void to_json(json& j, const TValueBundle& b) {
  j = json{{"kind", "tvalue"},
           {"m", b.m},
           {"direct", to_string(b.direct)},
           {"hypergeometric", to_string(b.hypergeometric)},
           {"integral", b.integral ? json(to_string(*b.integral)) : json(nullptr)},
           {"via_w", to_string(b.via_w)},
           {"approx", to_double(b.direct)},
           {"limit_gap", b.limit_gap}};
}

inline void from_json(const json& j, TValueBundle& b) {
  b.m = j.at("m").get<Index>();
  b.direct = parse_rational(j.at("direct").get<std::string>());
  b.hypergeometric = parse_rational(j.at("hypergeometric").get<std::string>());
  if (j.at("integral").is_null())
    b.integral.reset();
  else
    b.integral = parse_rational(j.at("integral").get<std::string>());
  b.via_w = parse_rational(j.at("via_w").get<std::string>());
  b.limit_gap = j.at("limit_gap").get<double>();
}

inline void to_json(json& j, const QuadratureResult& q) {
  j = json{{"kind", "quadrature"},
           {"m", q.m},
           {"a", q.a},
           {"numeric", q.numeric},
           {"closed_form", q.closed_form},
           {"relative_error", q.relative_error},
           {"evaluations", q.evaluations}};
}

inline void from_json(const json& j, QuadratureResult& q) {
  q.m = j.at("m").get<Index>();
  q.a = j.at("a").get<double>();
  q.numeric = j.at("numeric").get<double>();
  q.closed_form = j.at("closed_form").get<double>();
  q.relative_error = j.at("relative_error").get<double>();
  q.evaluations = j.at("evaluations").get<std::size_t>();
}

inline void to_json(json& j, const RunReport& r) {
  json results = json::array();
  for (const auto& res : r.results) std::visit([&](const auto& v) { results.push_back(json(v)); }, res);
  j = json{{"schema_version", kSchemaVersion},
           {"command", r.command},
           {"config", r.config},
           {"results", results},
           {"overall", r.passed() ? "pass" : "fail"},
           {"started", r.started},
           {"finished", r.finished}};
}

inline void from_json(const json& j, RunReport& r) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported report schema_version");
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.started = j.at("started").get<std::string>();
  r.finished = j.at("finished").get<std::string>();
  r.results.clear();
  for (const auto& item : j.at("results")) {
    const auto kind = item.at("kind").get<std::string>();
    if (kind == "property")
      r.results.emplace_back(item.get<PropertyReport>());
    else if (kind == "tvalue")
      r.results.emplace_back(item.get<TValueBundle>());
    else if (kind == "quadrature")
      r.results.emplace_back(item.get<QuadratureResult>());
    else
      throw std::invalid_argument("unknown result kind: " + kind);
  }
  const bool overall = j.at("overall").get<std::string>() == "pass";
  if (overall != r.passed()) throw std::invalid_argument("overall verdict disagrees with contained results");
}

}  // namespace bmp
