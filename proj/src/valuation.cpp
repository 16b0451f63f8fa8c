#include "thetalift/valuation.hpp"

#include <algorithm>

namespace thetalift {

namespace {

// Cross product of (b - a) x (c - a) in the (r, n) plane.
Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.r - a.r) * (c.n - a.n) - (b.n - a.n) * (c.r - a.r);
}

std::vector<Point> lower_chain(const std::vector<Point>& pts) {
  std::vector<Point> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(p);
  }
  return chain;
}

std::vector<Point> upper_chain(const std::vector<Point>& pts) {
  std::vector<Point> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) >= 0) chain.pop_back();
    chain.push_back(p);
  }
  return chain;
}

}  // namespace

bool point_less(const Point& a, const Point& b) {
  if (a.r != b.r) return a.r < b.r;
  return a.n < b.n;
}

std::vector<Point> support_points(const FJSeries& f) {
  std::vector<Point> pts;
  for (const auto& [q, p] : f.rows())
    for (const auto& [z2, c] : p.terms()) pts.push_back({frac(q, f.qden()), frac(z2, 2)});
  return pts;
}

SupportHull hull_of_points(std::vector<Point> pts, bool withRecession) {
  if (pts.empty()) throw Error("hull of an empty support");
  for (auto& p : pts) {
    p.n.canonicalize();
    p.r.canonicalize();
  }
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  SupportHull h;
  h.recession = withRecession;
  if (withRecession) {
    // Lowest point per r, then the strict lower chain.
    std::vector<Point> lowest;
    for (const auto& p : pts)
      if (lowest.empty() || lowest.back().r != p.r) lowest.push_back(p);
    h.extremePoints = lower_chain(lowest);
  } else {
    auto lo = lower_chain(pts), hi = upper_chain(pts);
    std::vector<Point> all = lo;
    all.insert(all.end(), hi.begin(), hi.end());
    std::sort(all.begin(), all.end(), point_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());
    h.extremePoints = std::move(all);
  }
  return h;
}

SupportHull hull_of_support(const FJSeries& f, bool withRecession) {
  if (f.empty()) throw Error("hull of the zero series");
  return hull_of_points(support_points(f), withRecession);
}

SupportHull minkowski_sum(const SupportHull& a, const SupportHull& b) {
  if (a.recession != b.recession) throw Error("recession flag mismatch");
  std::vector<Point> sums;
  sums.reserve(a.extremePoints.size() * b.extremePoints.size());
  for (const auto& p : a.extremePoints)
    for (const auto& q : b.extremePoints) sums.push_back({p.n + q.n, p.r + q.r});
  return hull_of_points(std::move(sums), a.recession);
}

SupportHull hull_scale(const SupportHull& h, const Rational& c) {
  if (c <= 0) throw Error("scale must be positive");
  SupportHull out = h;
  for (auto& p : out.extremePoints) {
    p.n *= c;
    p.r *= c;
  }
  return out;
}

Rational ord_via_hull(const SupportHull& h, const Rational& x) {
  if (h.extremePoints.empty()) throw Error("empty hull");
  Rational best = h.extremePoints.front().n + h.extremePoints.front().r * x;
  for (const auto& p : h.extremePoints) best = std::min<Rational>(best, p.n + p.r * x);
  return best;
}

Rational series_valuation_1d(const FJSeries& f) {
  if (f.empty()) throw Error("valuation of the zero series");
  return frac(f.min_q(), f.qden());
}

}  // namespace thetalift
