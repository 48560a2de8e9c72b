// Combinatorial shadows of an equation: the cloud N(F), the level polygons
// Gamma[k] and the Hironaka polygon Delta(F).
#pragma once

#include "surfres/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfres {

struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

std::string to_string(const Point2& p);

/// A polygon P + Q>=0^2 stored by its vertex chain. Along the chain x is
/// strictly increasing and y strictly decreasing; the empty chain is the
/// empty polygon.
class Staircase {
 public:
  Staircase() = default;

  /// Wraps a vertex chain, checking the monotonicity invariant.
  static Staircase from_vertices(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<Point2> vertices_;
};

/// A compact edge between consecutive vertices, `upper` to the left.
struct Facet {
  Point2 upper;
  Point2 lower;
  Rat slope;           // negative
  Rat length_squared;  // exact, stands in for the Euclidean length
};

struct PolygonMetrics {
  std::optional<Point2> left;   // L, leftmost vertex
  std::optional<Point2> right;  // R, rightmost vertex
  std::vector<Facet> facets;    // left to right
  bool is_quadrant = true;      // the empty polygon counts as a quadrant
  Rat dLR_squared;
  bool has_drop_point = false;  // some vertex with x + y < 1

  /// Throws EmptyPolygon on the empty staircase.
  const Point2& L() const;
  const Point2& R() const;
};

/// Exponents with nonzero coefficient plus the apex (0,0,n), canonical order.
std::vector<Exponent> cloud(const Surface& s);

/// Vertex chain of CH(U (p + Q>=0^2)). Points on the boundary rays or in the
/// interior of an edge are not vertices.
Staircase staircase_hull(std::vector<Point2> points);

/// Gamma of a bivariate polynomial: hull of its exponents (i, j).
Staircase newton_polygon(const BiPoly& a);

/// Gamma[k](S), empty when a_k = 0.
Staircase level_polygon(const Surface& s, unsigned k);

/// (i/(n-k), j/(n-k)); throws InvalidArgument when k >= n.
Point2 rho(const Exponent& e, unsigned n);

/// rho-images of every term of p with Z-exponent below n.
std::vector<Point2> projected_cloud(const TriPoly& p, unsigned n);

/// Delta(S).
Staircase hironaka_polygon(const Surface& s);

/// Delta computed from the terms of p below Z-degree n. Used on transform
/// outputs that need not be Weierstrass any more.
Staircase hironaka_polygon(const TriPoly& p, unsigned n);

PolygonMetrics polygon_metrics(const Staircase& st);

enum class Location { Outside, Boundary, Interior };

Location locate(const Staircase& st, const Point2& p);

}  // namespace surfres
