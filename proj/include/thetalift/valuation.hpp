#pragma once

#include <vector>

#include "thetalift/series.hpp"

namespace thetalift {

/// Support point q^n zeta^r.
struct Point {
  Rational n, r;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic by (r, n).
bool point_less(const Point& a, const Point& b);

/// Vertices of conv(points), plus the ray {(s, 0) : s >= 0} when recession is
/// set. With the ray only the lower chain in n survives.
struct SupportHull {
  std::vector<Point> extremePoints;
  bool recession = true;
  friend bool operator==(const SupportHull&, const SupportHull&) = default;
};

std::vector<Point> support_points(const FJSeries& f);
SupportHull hull_of_points(std::vector<Point> points, bool withRecession);
SupportHull hull_of_support(const FJSeries& f, bool withRecession);
SupportHull minkowski_sum(const SupportHull& a, const SupportHull& b);
/// Minkowski sum of h with itself scaled: {c p : p in h}.
SupportHull hull_scale(const SupportHull& h, const Rational& c);
/// min over extreme points of n + r x. The caller adds t x^2.
Rational ord_via_hull(const SupportHull& h, const Rational& x);
/// Lowest exponent of a series in q alone (every row counts).
Rational series_valuation_1d(const FJSeries& f);

}  // namespace thetalift
