#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ped/geometry.hpp"

namespace ped {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A straight-line drawing: vertex points plus edges, each edge realized as a
// segment. Segments are oriented from the lexicographically smaller vertex id,
// so positions along a segment are well defined in file formats.
struct Drawing {
  struct Vertex {
    int id;
    Point p;
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Segment> segments;  // segments[i] corresponds to edges[i]

  const Point& vertex_point(int id) const {
    for (const auto& v : vertices)
      if (v.id == id) return v.p;
    throw ParseError("unknown vertex id " + std::to_string(id));
  }

  double total_length() const {
    double sum = 0.0;
    for (const auto& s : segments) sum += s.length();
    return sum;
  }

  void rebuild_segments() {
    segments.clear();
    segments.reserve(edges.size());
    std::map<int, Point> pos;
    for (const auto& v : vertices) pos[v.id] = v.p;
    int sid = 0;
    for (auto [u, v] : edges) {
      auto iu = pos.find(u), iv = pos.find(v);
      if (iu == pos.end() || iv == pos.end())
        throw ParseError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                         "] references unknown vertex");
      Segment s{sid++, iu->second, iv->second};
      if (u > v) std::swap(s.a, s.b);
      if (s.length() <= 0.0)
        throw ParseError("zero-length segment for edge [" + std::to_string(u) + "," +
                         std::to_string(v) + "]");
      segments.push_back(s);
    }
  }

  void check() const {
    std::vector<std::pair<int, int>> seen;
    for (const auto& v : vertices) {
      if (!finite(v.p)) throw ParseError("non-finite coordinate at vertex " + std::to_string(v.id));
    }
    for (auto [u, v] : edges) {
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
      auto key = std::minmax(u, v);
      if (std::find(seen.begin(), seen.end(), std::make_pair(key.first, key.second)) != seen.end())
        throw ParseError("duplicate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
      seen.emplace_back(key.first, key.second);
    }
  }
};

enum class ChoiceKind { Full, SymmetricStubs, Gap, NoGapSentinel };

// One segment's drawn configuration and its ink value.
struct Choice {
  ChoiceKind kind = ChoiceKind::Full;
  double stub = 0.0;   // per-side stub length (SymmetricStubs)
  double gap_a = 0.0;  // gap interval, measured from the segment's `a` endpoint
  double gap_b = 0.0;
  double ink = 0.0;

  static Choice full(double len) { return {ChoiceKind::Full, 0, 0, 0, len}; }
  static Choice stubs(double /*len*/, double l) {
    return {ChoiceKind::SymmetricStubs, l, 0, 0, 2 * l};
  }
  static Choice gap(double len, double a, double b) {
    return {ChoiceKind::Gap, 0, a, b, len - (b - a)};
  }
  static Choice no_gap(double len) { return {ChoiceKind::NoGapSentinel, 0, 0, 0, len}; }

  // Whether this configuration erases a crossing at distance d along a
  // segment of length len. Touching resolves (closed-interval semantics).
  bool resolves(double d, double len) const {
    const double eps = kTol * len;
    switch (kind) {
      case ChoiceKind::Full:
      case ChoiceKind::NoGapSentinel:
        return false;
      case ChoiceKind::SymmetricStubs:
        return stub <= std::min(d, len - d) + eps;
      case ChoiceKind::Gap:
        return gap_a - eps <= d && d <= gap_b + eps;
    }
    return false;
  }
};

enum class Mode { SPED, PED, SHPED };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::SPED: return "sped";
    case Mode::PED: return "ped";
    case Mode::SHPED: return "shped";
  }
  return "?";
}

inline Mode mode_from_string(const std::string& s) {
  if (s == "sped") return Mode::SPED;
  if (s == "ped") return Mode::PED;
  if (s == "shped") return Mode::SHPED;
  throw ParseError("unknown mode '" + s + "'");
}

struct Solution {
  Mode mode = Mode::SPED;
  std::vector<Choice> assignment;  // indexed by segment id
  double total_ink = 0.0;
  double delta = -1.0;  // SHPED stub ratio, unset otherwise
};

// Total drawn length of a solution, recomputed from the per-segment choices.
inline double ink(const Solution& sol) {
  double sum = 0.0;
  for (const auto& c : sol.assignment) sum += c.ink;
  return sum;
}

inline Drawing scale_drawing(const Drawing& d, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ParseError("scale factor must be positive and finite");
  Drawing out = d;
  for (auto& v : out.vertices) v.p = c * v.p;
  out.rebuild_segments();
  return out;
}

// ---- file I/O -------------------------------------------------------------

inline Drawing load_drawing(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("drawing parse failure: ") + e.what());
  }
  Drawing d;
  try {
    for (const auto& v : j.at("vertices"))
      d.vertices.push_back({v.at("id").get<int>(), {v.at("x").get<double>(), v.at("y").get<double>()}});
    for (const auto& e : j.at("edges"))
      d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("drawing parse failure: ") + e.what());
  }
  d.check();
  d.rebuild_segments();
  return d;
}

inline std::string save_drawing(const Drawing& d) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : d.vertices)
    j["vertices"].push_back({{"id", v.id}, {"x", v.p.x}, {"y", v.p.y}});
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : d.edges) j["edges"].push_back({u, v});
  return j.dump();
}

inline std::string save_solution(const Drawing& d, const Solution& sol,
                                 const std::string& timestamp = "") {
  nlohmann::json j;
  j["mode"] = to_string(sol.mode);
  j["ink"] = ink(sol);
  if (sol.mode == Mode::SHPED)
    j["delta"] = sol.delta;
  else
    j["delta"] = nullptr;
  if (!timestamp.empty()) j["timestamp"] = timestamp;
  j["choices"] = nlohmann::json::array();
  for (size_t i = 0; i < sol.assignment.size(); ++i) {
    const Choice& c = sol.assignment[i];
    auto [u, v] = d.edges[i];
    nlohmann::json jc;
    jc["edge"] = {std::min(u, v), std::max(u, v)};
    switch (c.kind) {
      case ChoiceKind::Full:
      case ChoiceKind::NoGapSentinel:
        jc["kind"] = "full";
        jc["stub"] = nullptr;
        jc["gap"] = nullptr;
        break;
      case ChoiceKind::SymmetricStubs:
        jc["kind"] = "stubs";
        jc["stub"] = c.stub;
        jc["gap"] = nullptr;
        break;
      case ChoiceKind::Gap:
        jc["kind"] = "gap";
        jc["stub"] = nullptr;
        jc["gap"] = {c.gap_a, c.gap_b};
        break;
    }
    j["choices"].push_back(std::move(jc));
  }
  return j.dump();
}

inline Solution load_solution(const Drawing& d, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solution parse failure: ") + e.what());
  }
  Solution sol;
  sol.mode = mode_from_string(j.at("mode").get<std::string>());
  if (!j.at("delta").is_null()) sol.delta = j["delta"].get<double>();
  sol.assignment.assign(d.segments.size(), Choice{});
  std::vector<bool> filled(d.segments.size(), false);
  for (const auto& jc : j.at("choices")) {
    int u = jc.at("edge").at(0).get<int>(), v = jc.at("edge").at(1).get<int>();
    int sid = -1;
    for (size_t i = 0; i < d.edges.size(); ++i) {
      auto key = std::minmax(d.edges[i].first, d.edges[i].second);
      if (key.first == std::min(u, v) && key.second == std::max(u, v)) sid = static_cast<int>(i);
    }
    if (sid < 0)
      throw ParseError("solution references unknown edge [" + std::to_string(u) + "," +
                       std::to_string(v) + "]");
    const double len = d.segments[sid].length();
    const std::string kind = jc.at("kind").get<std::string>();
    if (kind == "full")
      sol.assignment[sid] = Choice::full(len);
    else if (kind == "stubs")
      sol.assignment[sid] = Choice::stubs(len, jc.at("stub").get<double>());
    else if (kind == "gap")
      sol.assignment[sid] =
          Choice::gap(len, jc.at("gap").at(0).get<double>(), jc.at("gap").at(1).get<double>());
    else
      throw ParseError("unknown choice kind '" + kind + "'");
    filled[sid] = true;
  }
  for (size_t i = 0; i < filled.size(); ++i)
    if (!filled[i]) throw ParseError("solution missing segment " + std::to_string(i));
  sol.total_ink = ink(sol);
  return sol;
}

}  // namespace ped
