#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eigenbasis.hpp"
#include "errors.hpp"
#include "kernel.hpp"
#include "moments.hpp"
#include "orbits.hpp"
#include "weighted.hpp"

namespace cherednik::io {

using json = nlohmann::ordered_json;

inline constexpr int kMomentTableVersion = 1;

/// Formats a double with 17 significant digits ("%.17g").
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep a decimal point or exponent so the value reads back as a float.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline void write_string(std::ostream& os, const std::string& s) { os << json(s).dump(); }

inline void write(std::ostream& os, const json& j, int indent, int level) {
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
  case json::value_t::object: {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << '{' << nl;
    bool first = true;
    for (const auto& [key, val] : j.items()) {
      if (!first) os << ',' << nl;
      first = false;
      os << pad;
      write_string(os, key);
      os << (indent > 0 ? ": " : ":");
      write(os, val, indent, level + 1);
    }
    os << nl << close_pad << '}';
    return;
  }
  case json::value_t::array: {
    if (j.empty()) {
      os << "[]";
      return;
    }
    // Arrays of scalars stay on one line.
    bool flat = true;
    for (const auto& v : j)
      if (v.is_structured()) flat = false;
    if (flat || indent == 0) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << (indent > 0 ? ", " : ",");
        write(os, j[i], indent, level + 1);
      }
      os << ']';
      return;
    }
    os << '[' << nl;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ',' << nl;
      os << pad;
      write(os, j[i], indent, level + 1);
    }
    os << nl << close_pad << ']';
    return;
  }
  case json::value_t::number_float: {
    const double v = j.get<double>();
    if (std::isfinite(v))
      os << format_double(v);
    else
      os << "null";
    return;
  }
  default:
    os << j.dump();
  }
}

} // namespace detail

/// Deterministic JSON text: insertion-ordered keys, 17 significant digits.
inline std::string dump(const json& j, int indent = 2) {
  std::ostringstream os;
  detail::write(os, j, indent, 0);
  os << '\n';
  return os.str();
}

inline json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

/// Finite values as numbers, non-finite ones as null.
inline json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// --- moments -----------------------------------------------------------------

inline json to_json(const MomentTable& t) {
  json values = json::array();
  for (int m = -t.max_freq(); m <= t.max_freq(); ++m) values.push_back(json::array({m, t(m)}));
  return json{{"version", kMomentTableVersion}, {"k", t.k()}, {"max_freq", t.max_freq()}, {"values", values}};
}

inline MomentTable moment_table_from_json(const json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != kMomentTableVersion)
    throw invalid_input("moment table: unsupported or missing version");
  const double k = j.at("k").get<double>();
  const int max_freq = j.at("max_freq").get<int>();
  if (max_freq < 0) throw invalid_input("moment table: negative max_freq");
  std::vector<double> vals(static_cast<std::size_t>(max_freq) + 1, std::numeric_limits<double>::quiet_NaN());
  for (const auto& pair : j.at("values")) {
    const int m = pair.at(0).get<int>();
    if (std::abs(m) > max_freq) throw invalid_input("moment table: entry outside max_freq");
    if (m >= 0) vals[static_cast<std::size_t>(m)] = pair.at(1).get<double>();
  }
  for (double v : vals)
    if (std::isnan(v)) throw invalid_input("moment table: missing entry");
  return MomentTable::from_values(k, std::move(vals));
}

// --- basis -------------------------------------------------------------------

inline json to_json(const EigenEntry& e) {
  json coeffs = json::array();
  for (const auto& [j, c] : e.poly) coeffs.push_back(json::array({j, c.real(), c.imag()}));
  return json{{"n", e.n}, {"eigenvalue", e.eigenvalue}, {"norm_sq", e.norm_sq}, {"coeffs", coeffs}};
}

inline json to_json(const Basis& b) {
  json entries = json::array();
  for (const auto& [n, e] : b.entries()) entries.push_back(to_json(e));
  return json{{"k", b.k()}, {"N", b.N()}, {"entries", entries}};
}

/// Rebuilds a Basis from its JSON document. Moments are recomputed for k
/// since the document does not carry them.
inline Basis basis_from_json(const json& j, double tol = kDefaultMomentTol) {
  const double k = j.at("k").get<double>();
  const int N = j.at("N").get<int>();
  std::map<int, EigenEntry> entries;
  int reach = 0;
  for (const auto& ej : j.at("entries")) {
    EigenEntry e;
    e.n = ej.at("n").get<int>();
    e.k = k;
    e.eigenvalue = ej.at("eigenvalue").get<double>();
    e.norm_sq = ej.at("norm_sq").get<double>();
    for (const auto& c : ej.at("coeffs")) e.poly.set(c.at(0).get<int>(), cplx(c.at(1).get<double>(), c.at(2).get<double>()));
    reach = std::max(reach, std::abs(e.n));
    entries.emplace(e.n, std::move(e));
  }
  return Basis(k, N, MomentTable(k, required_moment_range(reach), tol), std::move(entries));
}

// --- orbits ------------------------------------------------------------------

inline json to_json(const Orbit& o, int N) {
  return json{{"n", o.n}, {"partner", o.partner}, {"m", o.m}, {"case", std::string(to_string(classify_truncation(o, N)))}};
}

/// Parses "n:a,n:a,..." (whitespace tolerated, empty string allowed).
inline ExpSum parse_expsum(const std::string& text) {
  ExpSum s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw invalid_input("ExpSum literal: expected n:a, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string ns = item.substr(0, colon), as = item.substr(colon + 1);
      const int n = std::stoi(ns, &used);
      if (ns.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(ns);
      const double a = std::stod(as, &used);
      if (as.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(as);
      s.add(n, a);
    } catch (const std::logic_error&) {
      throw invalid_input("ExpSum literal: cannot parse '" + item + "'");
    }
  }
  return s;
}

inline std::string format_expsum(const ExpSum& s) {
  std::string out;
  for (const auto& [n, a] : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(n) + ':' + format_double(a);
  }
  return out;
}

// --- kernel ------------------------------------------------------------------

inline json to_json(const DiscrepancyReport& r) {
  json j{{"N", r.N},
         {"k", r.k},
         {"grid", {{"requested_points", r.requested_points}, {"evaluated_points", r.evaluated_points}, {"diagonal_guard", r.guard}}},
         {"max_abs_difference", r.max_abs_difference},
         {"argmax", {{"x", r.argmax_x}, {"y", r.argmax_y}}}};
  if (!r.points.empty()) {
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back(json::array({p.x, p.y, p.spectral.real(), p.spectral.imag(), p.boundary.real(), p.boundary.imag(), p.abs_diff}));
    j["points"] = pts;
  }
  return j;
}

inline void write_grid_csv(std::ostream& os, const DiscrepancyReport& r) {
  os << "x,y,re_spectral,im_spectral,re_boundary,im_boundary,abs_diff\n";
  for (const auto& p : r.points)
    os << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.spectral.real()) << ','
       << format_double(p.spectral.imag()) << ',' << format_double(p.boundary.real()) << ','
       << format_double(p.boundary.imag()) << ',' << format_double(p.abs_diff) << '\n';
}

inline json to_json(const LocalDecomposition& d) {
  json samples = json::array();
  for (const auto& [x, a] : d.A_samples) samples.push_back(json::array({x, a.real(), a.imag()}));
  return json{{"N", d.N},
              {"k", d.k},
              {"delta_request", d.delta_request},
              {"delta", d.delta},
              {"shrink_steps", d.shrink_steps},
              {"established", d.established},
              {"gamma_sq", d.gamma_sq},
              {"A_inf", d.A_inf},
              {"A_sup", d.A_sup},
              {"R_bound", d.R_bound},
              {"patch_points", d.patch_points},
              {"identity_defect", d.identity_defect},
              {"remainder_denominator_inf", d.remainder_denominator_inf},
              {"A_samples", samples}};
}

// --- weighted ----------------------------------------------------------------

inline json to_json(const WeightSpec& s) {
  json j{{"family", std::string(to_string(s.family))}, {"alpha", s.alpha}};
  if (s.family != WeightFamily::power) j["beta"] = s.beta;
  if (s.family == WeightFamily::example_a) j["gamma"] = s.gamma;
  return j;
}

/// Parses `power:alpha=1`, `powerlog:alpha=..,beta=..`, `examplea:alpha=..,beta=..,gamma=..`.
inline WeightSpec parse_weight(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  std::map<std::string, double> params;
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw invalid_input("weight spec: expected key=value, got '" + item + "'");
      try {
        std::size_t used = 0;
        const std::string vs = item.substr(eq + 1);
        const double v = std::stod(vs, &used);
        if (used != vs.size()) throw std::invalid_argument(vs);
        params[item.substr(0, eq)] = v;
      } catch (const std::logic_error&) {
        throw invalid_input("weight spec: bad number in '" + item + "'");
      }
    }
  }
  auto take = [&](const char* key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    const double v = it->second;
    params.erase(it);
    return v;
  };
  WeightSpec spec;
  if (family == "power") {
    spec = WeightSpec::power(take("alpha", 0.0));
  } else if (family == "powerlog") {
    const double a = take("alpha", 0.0);
    spec = WeightSpec::power_log(a, take("beta", 0.0));
  } else if (family == "examplea") {
    const double a = take("alpha", 0.0);
    const double b = take("beta", 0.0);
    spec = WeightSpec::example_a(a, b, take("gamma", 1.0));
  } else {
    throw invalid_input("weight spec: unknown family '" + family + "'");
  }
  if (!params.empty()) throw invalid_input("weight spec: unknown parameter '" + params.begin()->first + "'");
  return spec;
}

inline json to_json(const CriterionReport& r) {
  return json{{"weight", to_json(r.spec)},
              {"p", r.p},
              {"delta", r.delta},
              {"exponent", r.exponent},
              {"classification", std::string(to_string(r.classification))},
              {"integral_estimate", number_or_null(r.integral_estimate)},
              {"divergent", r.classification == Classification::divergent},
              {"lower_bound", r.lower_bound},
              {"upper_bound", number_or_null(r.upper_bound)},
              {"shell_ratio", r.shell_ratio},
              {"terminated_by_underflow", r.terminated_by_underflow},
              {"averaged_shells", r.averaged_shells},
              {"shell_values", r.shell_values}};
}

inline json to_json(const DualNormReport& r) {
  return json{{"pairing", std::string(to_string(r.pairing))},
              {"p", r.p},
              {"delta", r.delta},
              {"classification", std::string(to_string(r.classification))},
              {"closed_form_value", number_or_null(r.closed_form_value)},
              {"divergent", !std::isfinite(r.closed_form_value)},
              {"epsilons", r.epsilons},
              {"extremizer_lower_bounds", r.extremizer_lower_bounds}};
}

inline json to_json(const EnvelopeCheck& c) {
  return json{{"c1", c.c1}, {"c2", c.c2}, {"points", c.points}, {"max_violation", c.max_violation}, {"worst_y", c.worst_y}, {"pass", c.max_violation <= 0.0}};
}

inline json to_json(const ThresholdScan& s) {
  json rows = json::array();
  for (const auto& r : s.rows)
    rows.push_back(json{{"alpha", r.alpha}, {"classification", std::string(to_string(r.classification))}, {"integral_or_bound", r.integral_or_bound}});
  return json{{"p", s.p}, {"delta", s.delta}, {"alpha_star", s.alpha_star}, {"bracket", json::array({s.bracket_lo, s.bracket_hi})}, {"rows", rows}};
}

inline void write_scan_csv(std::ostream& os, const ThresholdScan& s) {
  os << "alpha,classification,integral_or_bound\n";
  for (const auto& r : s.rows)
    os << format_double(r.alpha) << ',' << to_string(r.classification) << ',' << format_double(r.integral_or_bound) << '\n';
}

} // namespace cherednik::io
