#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace ped {

// Relative tolerance governing all degeneracy tests. Distances within
// kTol * |segment| of each other are treated as equal.
inline constexpr double kTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double c, Point p) { return {c * p.x, c * p.y}; }
  friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(b - a); }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  int id = -1;
  Point a;
  Point b;

  double length() const { return dist(a, b); }

  Point at(double t) const { return a + t * (b - a); }
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Proper interior intersection of two segments, as parameters t (on p) and
// u (on q), both in [0, 1]. Returns nothing for disjoint or merely touching
// pairs; throws on collinear overlap.
struct SegmentHit {
  double t;  // parameter on the first segment
  double u;  // parameter on the second segment
  Point point;
};

inline std::optional<SegmentHit> intersect_segments(const Segment& p, const Segment& q) {
  const Point r = p.b - p.a;
  const Point s = q.b - q.a;
  const double denom = cross(r, s);
  const Point pq = q.a - p.a;
  const double scale = norm(r) * norm(s);
  if (std::abs(denom) <= kTol * scale) {
    // Parallel. Overlapping collinear pairs are malformed input.
    if (std::abs(cross(pq, r)) <= kTol * norm(pq) * norm(r) + kTol * scale) {
      const double t0 = dot(pq, r) / dot(r, r);
      const double t1 = t0 + dot(s, r) / dot(r, r);
      const double lo = std::min(t0, t1);
      const double hi = std::max(t0, t1);
      if (hi > kTol && lo < 1.0 - kTol) {
        throw GeometryError("degenerate overlap between segments " + std::to_string(p.id) +
                            " and " + std::to_string(q.id));
      }
    }
    return std::nullopt;
  }
  const double t = cross(pq, s) / denom;
  const double u = cross(pq, r) / denom;
  if (t < -kTol || t > 1.0 + kTol || u < -kTol || u > 1.0 + kTol) return std::nullopt;
  return SegmentHit{t, u, p.at(t)};
}

}  // namespace ped
