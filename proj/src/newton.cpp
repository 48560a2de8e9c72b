#include "surfres/newton.hpp"

#include "surfres/error.hpp"

#include <algorithm>
#include <map>

namespace surfres {

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Staircase Staircase::from_vertices(std::vector<Point2> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].x < 0 || vertices[i].y < 0)
      throw Error(ErrorCode::InvalidArgument, "staircase vertex " + to_string(vertices[i]) + " has a negative coordinate");
    if (i > 0 && !(vertices[i - 1].x < vertices[i].x && vertices[i - 1].y > vertices[i].y))
      throw Error(ErrorCode::InvalidArgument, "staircase vertices must go right and down");
  }
  Staircase st;
  st.vertices_ = std::move(vertices);
  return st;
}

const Point2& PolygonMetrics::L() const {
  if (!left) throw Error(ErrorCode::EmptyPolygon, "leftmost vertex of the empty polygon");
  return *left;
}

const Point2& PolygonMetrics::R() const {
  if (!right) throw Error(ErrorCode::EmptyPolygon, "rightmost vertex of the empty polygon");
  return *right;
}

std::vector<Exponent> cloud(const Surface& s) {
  std::vector<Exponent> pts;
  bool apex = false;
  for (const auto& [e, c] : s.poly().terms()) {
    pts.push_back(e);
    apex = apex || e == Exponent{0, 0, s.n()};
  }
  if (!apex) pts.insert(pts.begin(), Exponent{0, 0, s.n()});
  return pts;
}

namespace {

// (b - a) x (c - a)
Rat cross(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

Staircase staircase_hull(std::vector<Point2> points) {
  if (points.empty()) return {};

  // Lowest point in each column.
  std::map<Rat, Rat> column;
  for (auto& p : points) {
    auto [it, inserted] = column.try_emplace(p.x, p.y);
    if (!inserted && p.y < it->second) it->second = p.y;
  }

  // R: lowest y, leftmost among ties. Columns right of R are dominated by it.
  auto right = column.begin();
  for (auto it = column.begin(); it != column.end(); ++it)
    if (it->second < right->second) right = it;

  std::vector<Point2> chain;
  for (auto it = column.begin(); it != std::next(right); ++it) {
    Point2 p{it->first, it->second};
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(std::move(p));
  }
  return Staircase::from_vertices(std::move(chain));
}

Staircase newton_polygon(const BiPoly& a) {
  std::vector<Point2> pts;
  pts.reserve(a.size());
  for (const auto& [e, c] : a.terms()) pts.push_back({Rat(e.i), Rat(e.j)});
  return staircase_hull(std::move(pts));
}

Staircase level_polygon(const Surface& s, unsigned k) {
  if (k >= s.n()) throw Error(ErrorCode::InvalidArgument, "level " + std::to_string(k) + " is not below n");
  return newton_polygon(s.level(k));
}

Point2 rho(const Exponent& e, unsigned n) {
  if (e.k >= n)
    throw Error(ErrorCode::InvalidArgument, "rho undefined for " + to_string(e) + " with n = " + std::to_string(n));
  Rat d(n - e.k);
  return {Rat(e.i) / d, Rat(e.j) / d};
}

std::vector<Point2> projected_cloud(const TriPoly& p, unsigned n) {
  std::vector<Point2> pts;
  for (const auto& [e, c] : p.terms())
    if (e.k < n) pts.push_back(rho(e, n));
  return pts;
}

Staircase hironaka_polygon(const Surface& s) { return hironaka_polygon(s.poly(), s.n()); }

Staircase hironaka_polygon(const TriPoly& p, unsigned n) { return staircase_hull(projected_cloud(p, n)); }

PolygonMetrics polygon_metrics(const Staircase& st) {
  PolygonMetrics m;
  const auto& v = st.vertices();
  if (v.empty()) return m;
  m.left = v.front();
  m.right = v.back();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Rat dx = v[i + 1].x - v[i].x;
    Rat dy = v[i + 1].y - v[i].y;
    m.facets.push_back({v[i], v[i + 1], dy / dx, dx * dx + dy * dy});
  }
  m.is_quadrant = m.facets.empty();
  Rat dx = m.right->x - m.left->x;
  Rat dy = m.left->y - m.right->y;
  m.dLR_squared = dx * dx + dy * dy;
  m.has_drop_point = std::any_of(v.begin(), v.end(), [](const Point2& p) { return p.x + p.y < 1; });
  return m;
}

Location locate(const Staircase& st, const Point2& p) {
  const auto& v = st.vertices();
  if (v.empty()) return Location::Outside;
  if (p.x < v.front().x || p.y < v.back().y) return Location::Outside;
  bool on_edge = p.x == v.front().x || p.y == v.back().y;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    Rat c = cross(v[i], v[i + 1], p);
    if (c < 0) return Location::Outside;
    if (c == 0) on_edge = true;
  }
  return on_edge ? Location::Boundary : Location::Interior;
}

}  // namespace surfres
