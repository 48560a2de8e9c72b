#include "surfres/transform.hpp"

#include "surfres/error.hpp"
#include "surfres/newton.hpp"

#include <algorithm>

namespace surfres {

Direction::Direction(const Rat& a, const Rat& b, const Rat& c) {
  Rat lead = a != 0 ? a : b != 0 ? b : c;
  if (lead == 0) throw Error(ErrorCode::InvalidArgument, "direction (0:0:0)");
  a_ = a / lead;
  b_ = b / lead;
  c_ = c / lead;
}

std::string to_string(const Direction& d) {
  return "(" + to_string(d.a()) + ":" + to_string(d.b()) + ":" + to_string(d.c()) + ")";
}

Direction parse_direction(std::string_view text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  Rat v[3];
  for (int i = 0; i < 3; ++i) {
    auto colon = text.find(':');
    if ((i < 2) == (colon == std::string_view::npos))
      throw Error(ErrorCode::InvalidArgument, "direction must look like a:b:c");
    try {
      v[i] = parse_rat(text.substr(0, colon));
    } catch (const std::invalid_argument& e) {
      throw Error(ErrorCode::InvalidArgument, e.what());
    }
    if (colon != std::string_view::npos) text.remove_prefix(colon + 1);
  }
  return Direction(v[0], v[1], v[2]);
}

std::string to_string(const StepKind& k) {
  struct Visitor {
    std::string operator()(const QuadraticStep& q) const { return "quadratic " + to_string(q.direction); }
    std::string operator()(const MonoidalStep& m) const {
      return std::string(m.axis == Axis::ZX ? "monoidal-zx " : "monoidal-zy ") + to_string(m.gamma);
    }
    std::string operator()(const Transvection& t) const { return "transvection " + to_string(t); }
  };
  return std::visit(Visitor{}, k);
}

TriPoly quadratic_substitution(const TriPoly& p, const Direction& d) {
  const TriPoly X = TriPoly::X(), Y = TriPoly::Y(), Z = TriPoly::Z();
  Substitution sub;
  if (d.a() != 0) {
    sub.y = X * (Y + TriPoly(d.b()));
    sub.z = X * (Z + TriPoly(d.c()));
  } else if (d.b() != 0) {
    sub.x = X * Y;
    sub.z = Y * (Z + TriPoly(d.c()));
  } else {
    throw Error(ErrorCode::ForbiddenDirection, "(0:0:1) is not on the tangent cone of a Weierstrass equation");
  }
  return substitute(p, sub);
}

TriPoly quadratic(const TriPoly& p, const Direction& d) {
  auto n = order(p);
  if (!n) throw Error(ErrorCode::ZeroInput, "quadratic transform of 0");
  TriPoly raw = quadratic_substitution(p, d);
  return divide_monomial_exact(raw, d.a() != 0 ? Exponent{*n, 0, 0} : Exponent{0, *n, 0});
}

TriPoly quadratic(const Surface& s, const Direction& d) { return quadratic(s.poly(), d); }

bool permissible(const Surface& s, Axis axis) {
  const unsigned n = s.n();
  const auto pts = cloud(s);
  return std::all_of(pts.begin(), pts.end(),
                     [&](const Exponent& e) { return (axis == Axis::ZX ? e.i : e.j) + e.k >= n; });
}

TriPoly monoidal(const Surface& s, Axis axis, const Rat& gamma) {
  if (!permissible(s, axis))
    throw Error(ErrorCode::NotPermissible,
                std::string(axis == Axis::ZX ? "(Z,X)" : "(Z,Y)") + " is not permissible for " + to_string(s.poly()));
  const TriPoly t = axis == Axis::ZX ? TriPoly::X() : TriPoly::Y();
  Substitution sub;
  sub.z = t * (TriPoly::Z() + TriPoly(gamma));
  TriPoly raw = substitute(s.poly(), sub);
  return divide_monomial_exact(raw, axis == Axis::ZX ? Exponent{s.n(), 0, 0} : Exponent{0, s.n(), 0});
}

std::pair<Rat, Transvection> factor_direction_through_transvection(const Rat& alpha, const Transvection& phi) {
  const auto& c = phi.coeffs();
  if (c.empty()) return {alpha, phi};
  return {alpha - c[0], Transvection(std::vector<Rat>(c.begin() + 1, c.end()))};
}

}  // namespace surfres
