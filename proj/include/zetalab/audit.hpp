#pragma once

// The identity-audit harness: a catalog of numbered checks, each evaluated
// by every route the library offers, in two modes. "literal" evaluates the
// displayed prefactors and sign conventions verbatim; "audited" evaluates
// the Laurent-canonical normalization of the same identity. Disagreements
// get a constant-factor ratio diagnosis against a small dictionary.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetalab/characters.hpp"
#include "zetalab/lfunctions.hpp"
#include "zetalab/numerics.hpp"
#include "zetalab/primeprod.hpp"
#include "zetalab/special.hpp"
#include "zetalab/stieltjes.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab::audit {

enum class Mode { literal, audited };
enum class Status { pass, fail, mismatch_const_factor };

inline const char* to_string(Mode m) { return m == Mode::literal ? "literal" : "audited"; }
inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::mismatch_const_factor: return "MISMATCH_CONST_FACTOR";
  }
  return "?";
}

struct RouteValue {
  std::string name;
  double value = 0.0;
  double err = 0.0;
};

struct RatioDiagnostic {
  double measured_ratio = 0.0;
  std::string nearest_simple_factor;  // empty when the dictionary has no hit
};

struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_location;
  Mode mode = Mode::audited;
  std::vector<RouteValue> routes;
  double max_pairwise_diff = 0.0;
  double tolerance = 1e-9;
  Status status = Status::pass;
  std::optional<RatioDiagnostic> ratio_diagnostic;
  std::string notes;

  // set by check evaluators:
  std::optional<double> convention_flip_value;  // value of the literal route
                                                // re-evaluated with the
                                                // (-1)^k convention inserted
  std::optional<bool> forced_pass;        // for bound/inequality style checks
  std::optional<double> reported_diff;    // overrides max_pairwise_diff when the
                                          // route list mixes incomparable scales
};

struct AuditConfig {
  std::uint64_t sieve_limit = 10000000;
  double quadrature_target = 1e-12;
  int n_max = 40;
  std::int64_t epstein_radius = 2000;
  double theta7 = 2.0 * std::atan(std::sqrt(7.0));  // candidate angle, never assumed
  bool p3_exponent_sqrt23 = true;  // literal-series exponent candidate
};

// ---------------------------------------------------------------------------
// Constant-factor dictionary.

namespace detail {

struct FactorEntry {
  std::string name;
  double value;
};

inline void push_factor(std::vector<FactorEntry>& out, std::string name, double v) {
  out.push_back({std::move(name), v});
  out.push_back({"-" + out.back().name, -v});
}

inline std::vector<FactorEntry> factor_dictionary(std::int64_t modulus) {
  std::vector<FactorEntry> out;
  push_factor(out, "1", 1.0);
  for (int j = 1; j <= 8; ++j) {
    push_factor(out, "2^" + std::to_string(j), std::pow(2.0, j));
    push_factor(out, "2^-" + std::to_string(j), std::pow(2.0, -j));
  }
  if (modulus > 1) {
    for (int j = 1; j <= 4; ++j) {
      push_factor(out, "|D|^" + std::to_string(j), std::pow(static_cast<double>(modulus), j));
      push_factor(out, "|D|^-" + std::to_string(j), std::pow(static_cast<double>(modulus), -j));
    }
  }
  for (int j = -4; j <= 4; ++j) {
    if (j == 0) continue;
    double pj = std::pow(std::numbers::pi, j);
    for (int p = 1; p <= 64; ++p) {
      for (int q = 1; q <= 64; ++q) {
        if (std::gcd(p, q) != 1) continue;
        std::string nm = "pi^" + std::to_string(j) + "*" + std::to_string(p) + "/" + std::to_string(q);
        push_factor(out, std::move(nm), pj * p / q);
      }
    }
  }
  return out;
}

}  // namespace detail

// Searches the finite factor dictionary for x/y; returns the entry within
// relative 1e-6, provided the hit is unique as a value.
inline std::optional<RatioDiagnostic> ratio_diagnose(double x, double y, std::int64_t modulus = 0) {
  if (!(std::isfinite(x) && std::isfinite(y)) || x == 0.0 || y == 0.0) return std::nullopt;
  double r = x / y;
  auto dict = detail::factor_dictionary(modulus);
  const detail::FactorEntry* best = nullptr;
  bool ambiguous = false;
  for (const auto& e : dict) {
    if (std::abs(r - e.value) <= 1e-6 * std::abs(e.value)) {
      if (best == nullptr) {
        best = &e;
      } else if (std::abs(best->value - e.value) > 1e-12 * std::abs(e.value)) {
        ambiguous = true;  // two distinct dictionary values both match
      }
    }
  }
  if (best == nullptr || ambiguous) return std::nullopt;
  return RatioDiagnostic{r, best->name};
}

// ---------------------------------------------------------------------------
// Check definitions and the runner.

struct CheckDef {
  std::string id;
  std::string description;
  std::string paper_location;
  double tolerance = 1e-9;
  std::int64_t modulus = 0;  // for the |D|^j dictionary entries
  std::function<void(const AuditConfig&, Mode, CheckResult&)> eval;
};

const std::vector<CheckDef>& check_catalog();  // defined in audit_checks.hpp

inline std::optional<const CheckDef*> find_check(const std::string& id) {
  for (const auto& def : check_catalog())
    if (def.id == id) return &def;
  return std::nullopt;
}

inline CheckResult run_one(const CheckDef& def, const AuditConfig& config, Mode mode) {
  CheckResult res;
  res.id = def.id;
  res.description = def.description;
  res.paper_location = def.paper_location;
  res.mode = mode;
  res.tolerance = def.tolerance;
  try {
    def.eval(config, mode, res);
  } catch (const std::exception& e) {
    res.status = Status::fail;
    res.notes += std::string("evaluation error: ") + e.what();
    return res;
  }

  // pairwise spread over all routes
  double maxdiff = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < res.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < res.routes.size(); ++j) {
      double d = std::abs(res.routes[i].value - res.routes[j].value);
      if (d > maxdiff) {
        maxdiff = d;
        wi = i;
        wj = j;
      }
    }
  }
  res.max_pairwise_diff = res.reported_diff.value_or(maxdiff);

  if (res.routes.size() >= 2) {
    double a = res.routes[wi].value, b = res.routes[wj].value;
    if (a != 0.0 && b != 0.0) {
      auto diag = ratio_diagnose(a, b, def.modulus);
      RatioDiagnostic rd;
      rd.measured_ratio = a / b;
      if (diag) rd.nearest_simple_factor = diag->nearest_simple_factor;
      res.ratio_diagnostic = rd;
    }
  }

  bool within = maxdiff <= res.tolerance;
  if (res.forced_pass.has_value()) {
    res.status = *res.forced_pass ? Status::pass : Status::fail;
  } else if (within) {
    res.status = Status::pass;
  } else if (res.convention_flip_value.has_value() && res.routes.size() >= 2 &&
             std::min(std::abs(*res.convention_flip_value - res.routes[wi].value),
                      std::abs(*res.convention_flip_value - res.routes[wj].value)) <= res.tolerance) {
    res.status = Status::mismatch_const_factor;
    if (!res.ratio_diagnostic) res.ratio_diagnostic = RatioDiagnostic{};
    res.ratio_diagnostic->nearest_simple_factor = "(-1)^k-convention";
  } else if (res.ratio_diagnostic && !res.ratio_diagnostic->nearest_simple_factor.empty() &&
             res.ratio_diagnostic->nearest_simple_factor != "1" &&
             res.ratio_diagnostic->nearest_simple_factor != "-1") {
    // a single constant rescaling of one route explains the discrepancy
    res.status = Status::mismatch_const_factor;
  } else {
    res.status = Status::fail;
  }
  return res;
}

inline CheckResult run_one(const std::string& id, const AuditConfig& config, Mode mode) {
  auto def = find_check(id);
  if (!def) throw std::invalid_argument("run_one: unknown check id '" + id + "'");
  return run_one(**def, config, mode);
}

// Simple glob: '*' and '?' wildcards.
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

struct Summary {
  int pass = 0;
  int fail = 0;
  int mismatch = 0;
};

struct Report {
  std::string mode;  // "literal", "audited" or "both"
  AuditConfig config;
  std::string timestamp;  // ISO-8601 UTC
  std::vector<CheckResult> checks;
  Summary summary;
};

inline Report run_all(const AuditConfig& config, const std::string& mode_request = "audited",
                      const std::string& filter = "", const std::string& timestamp = "") {
  std::vector<Mode> modes;
  if (mode_request == "literal") modes = {Mode::literal};
  else if (mode_request == "audited") modes = {Mode::audited};
  else if (mode_request == "both") modes = {Mode::literal, Mode::audited};
  else throw std::invalid_argument("run_all: mode must be literal, audited or both");

  Report report;
  report.mode = mode_request;
  report.config = config;
  report.timestamp = timestamp;

  std::vector<const CheckDef*> selected;
  for (const auto& def : check_catalog())
    if (filter.empty() || glob_match(filter, def.id)) selected.push_back(&def);
  std::sort(selected.begin(), selected.end(),
            [](const CheckDef* a, const CheckDef* b) { return a->id < b->id; });

  for (const CheckDef* def : selected) {
    for (Mode m : modes) {
      CheckResult r = run_one(*def, config, m);
      switch (r.status) {
        case Status::pass: ++report.summary.pass; break;
        case Status::fail: ++report.summary.fail; break;
        case Status::mismatch_const_factor: ++report.summary.mismatch; break;
      }
      report.checks.push_back(std::move(r));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization. Field names and order are fixed; doubles go through the
// shortest-round-trip formatter so emitted reports re-parse bit-exactly.

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["meta"] = {
      {"mode", report.mode},
      {"config",
       {{"sieve_limit", report.config.sieve_limit},
        {"quadrature_target", report.config.quadrature_target},
        {"n_max", report.config.n_max},
        {"epstein_radius", report.config.epstein_radius},
        {"theta7", report.config.theta7},
        {"p3_exponent", report.config.p3_exponent_sqrt23 ? "sqrt23" : "sqrt3"}}},
      {"timestamp", report.timestamp},
      {"versions", {{"zetalab", "1.0.0"}, {"report_schema", "1"}}},
  };
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["mode"] = to_string(c.mode);
    jc["description"] = c.description;
    jc["paper_location"] = c.paper_location;
    jc["routes"] = nlohmann::ordered_json::array();
    for (const auto& r : c.routes)
      jc["routes"].push_back({{"route", r.name}, {"value", r.value}, {"err", r.err}});
    jc["max_pairwise_diff"] = c.max_pairwise_diff;
    jc["tolerance"] = c.tolerance;
    jc["status"] = to_string(c.status);
    if (c.ratio_diagnostic) {
      jc["ratio_diagnostic"] = {{"measured_ratio", c.ratio_diagnostic->measured_ratio},
                                {"nearest_simple_factor", c.ratio_diagnostic->nearest_simple_factor}};
    } else {
      jc["ratio_diagnostic"] = nullptr;
    }
    jc["notes"] = c.notes;
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"mismatch", report.summary.mismatch}};
  return j;
}

// CSV: one row per route per check.
inline std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "id,mode,route,value,err,status,tolerance,max_pairwise_diff,measured_ratio,"
        "nearest_simple_factor,paper_location\n";
  auto esc = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      else out += ch;
    }
    out += '"';
    return out;
  };
  for (const auto& c : report.checks) {
    for (const auto& r : c.routes) {
      os << esc(c.id) << ',' << to_string(c.mode) << ',' << esc(r.name) << ','
         << format_double(r.value) << ',' << format_double(r.err) << ',' << to_string(c.status)
         << ',' << format_double(c.tolerance) << ',' << format_double(c.max_pairwise_diff) << ',';
      if (c.ratio_diagnostic) os << format_double(c.ratio_diagnostic->measured_ratio);
      os << ',';
      if (c.ratio_diagnostic) os << esc(c.ratio_diagnostic->nearest_simple_factor);
      os << ',' << esc(c.paper_location) << '\n';
    }
  }
  return os.str();
}

}  // namespace zetalab::audit

#include "zetalab/audit_checks.hpp"
