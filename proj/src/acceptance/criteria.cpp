#include "acceptance/criteria.hpp"

#include "acceptance/generators.hpp"
#include "surfres/bounds.hpp"
#include "surfres/newton.hpp"
#include "surfres/parse.hpp"
#include "surfres/prepare.hpp"
#include "surfres/resolve.hpp"
#include "surfres/transform.hpp"

#include <functional>
#include <sstream>

namespace surfres::acceptance {

namespace {

constexpr unsigned kMaxSteps = 64;

// Thrown by check() to carry the first counterexample.
struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Surface eq(const std::string& text) { return as_surface(parse_poly(text)); }

std::string pts(const std::vector<Point2>& v) {
  std::string s;
  for (const auto& p : v) s += (s.empty() ? "" : " ") + to_string(p);
  return s;
}

std::string str(long v) { return std::to_string(v); }

Point2 shear(const Point2& p) { return {p.x + p.y - 1, p.y}; }

bool is_polygon_gwt(const TriPoly& p, unsigned n) {
  if (!p.z_level(n - 1).is_zero()) return false;
  for (unsigned k = 0; k + 1 < n; ++k) {
    BiPoly a = p.z_level(k);
    if (!a.is_zero() && !is_x_regular(a)) return false;
  }
  return true;
}

std::string c1() {
  auto st = hironaka_polygon(eq("Z^3+X^2*Z+Y^3-X^4"));
  std::vector<Point2> want{{0, 1}, {1, 0}};
  check(st.vertices() == want, "vertices " + pts(st.vertices()));
  Point2 p{Rat(4, 3), 0};
  check(locate(st, p) == Location::Boundary, "(4/3,0) not on the boundary");
  return "vertices " + pts(st.vertices()) + "; (4/3,0) on boundary, not a vertex";
}

std::string c2() {
  auto a = rho({3, 3, 0}, 5), b = rho({2, 1, 3}, 5);
  check(a == Point2{Rat(3, 5), Rat(3, 5)}, "rho(3,3,0) = " + to_string(a));
  check(b == Point2{1, Rat(1, 2)}, "rho(2,1,3) = " + to_string(b));
  return to_string(a) + " " + to_string(b);
}

std::string c3() {
  for (int r = 2; r <= 5; ++r) {
    auto s = eq("Z^2+X^2+Y^" + str(2 * r));
    unsigned d = worst_case_depth(s, kMaxSteps);
    BigInt b = bound_nonplane(s);
    check(d == static_cast<unsigned>(r) && b == r, "r=" + str(r) + ": depth " + str(d) + ", bound " + b.get_str());
  }
  return "r=2..5: depth = bound = r";
}

std::string c4() {
  for (int n = 3; n <= 6; ++n) {
    auto s = eq("Z^" + str(n) + "+X^" + str(n - 1) + "*Y^" + str(n - 1));
    auto w = explore_worst_case(s, kMaxSteps);
    BigInt b = bound_prepared(s);
    check(w.depth == static_cast<unsigned>(n - 1) && b == n - 1,
          "n=" + str(n) + ": depth " + str(w.depth) + ", bound " + b.get_str());
    for (const auto& k : w.path) {
      auto q = std::get_if<QuadraticStep>(&k);
      check(q && q->direction == Direction(0, 1, 0), "n=" + str(n) + ": worst branch has step " + to_string(k));
    }
  }
  return "n=3..6: depth = bound = n-1 along (0:1:0)^(n-1)";
}

std::string c5() {
  for (int n = 2; n <= 4; ++n) {
    auto s = eq("Z^" + str(n) + "+X^" + str(2 * n - 1) + "*Y^" + str(2 * n - 1));
    unsigned d = worst_case_depth(s, kMaxSteps);
    BigInt q = bound_quadrant(s), p = bound_prepared(s);
    check(d == static_cast<unsigned>(n + 1) && q == n + 2 && p == 3 * n - 1 && q < p,
          "n=" + str(n) + ": depth " + str(d) + ", quadrant " + q.get_str() + ", prepared " + p.get_str());
  }
  return "n=2..4: depth n+1, quadrant n+2 < prepared 3n-1";
}

std::string c6() {
  auto s = eq("Z^5+X^2*Y*Z^3+X^3*Y^3");
  check(preparation_report(s).is_prepared, "not prepared");
  auto m = polygon_metrics(hironaka_polygon(s));
  check(m.L() == Point2{Rat(3, 5), Rat(3, 5)} && m.R() == Point2{1, Rat(1, 2)},
        "L=" + to_string(m.L()) + " R=" + to_string(m.R()));
  BigInt b = bound_prepared(s);
  check(b == 4, "bound " + b.get_str());
  auto t = quadratic(s, Direction(1, 1, 0));
  check(*order(t) < 5, "order after (1:1:0) is " + str(*order(t)));
  return "prepared, L=(3/5,3/5), R=(1,1/2), bound 4, order after (1:1:0) = " + str(*order(t));
}

std::string c7() {
  std::string out;
  for (int r = 4; r <= 8; ++r) {
    auto t = quadratic(eq("Z^2+(X-Y)^3+X^" + str(r)), Direction(1, 1, 0));
    auto m = polygon_metrics(hironaka_polygon(t, 2));
    check(m.facets.size() == 1, "r=" + str(r) + ": " + str(static_cast<long>(m.facets.size())) + " facets");
    const Rat& s = m.facets[0].slope;
    bool cls = r <= 5 ? s < -1 : r == 6 ? s == -1 : s > -1;
    check(cls, "r=" + str(r) + ": slope " + to_string(s));
    if (r == 4) check(s == -3, "r=4: slope " + to_string(s));
    if (r == 6) check(s == -1, "r=6: slope " + to_string(s));
    if (r == 7) check(s == Rat(-3, 4), "r=7: slope " + to_string(s));
    out += (out.empty() ? "slopes " : ", ") + to_string(s);
  }
  return out;
}

std::string c8() {
  auto s = eq("Z^3-(X^3*Y^2+X*Y^3+Y^4)*Z+X^9*Y^8");
  auto has_unit_slope = [](const Staircase& st) {
    const auto m = polygon_metrics(st);
    for (const auto& f : m.facets)
      if (f.slope == -1) return true;
    return false;
  };
  auto before = hironaka_polygon(s);
  check(has_unit_slope(before), "Delta " + pts(before.vertices()));
  auto after = hironaka_polygon(quadratic(s, Direction(1, 0, 0)), 3);
  check(has_unit_slope(after), "Delta after (1:0:0) " + pts(after.vertices()));
  return "before " + pts(before.vertices()) + "; after " + pts(after.vertices());
}

std::string c9() {
  Rng rng(9);
  int checked = 0;
  while (checked < 200) {
    auto s = random_wt(rng, 10);
    auto st = hironaka_polygon(s);
    if (st.empty()) continue;
    ++checked;
    auto m = polygon_metrics(st);
    auto m2 = polygon_metrics(hironaka_polygon(quadratic(s, Direction(1, 0, 0)), s.n()));
    const std::string ctx = to_string(s.poly()) + ": ";
    std::vector<std::pair<Point2, Point2>> expected;
    for (const auto& f : m.facets) {
      Point2 u = shear(f.upper), l = shear(f.lower);
      if (f.slope <= -1) {
        for (const auto& g : m2.facets) check(!(g.upper == u && g.lower == l), ctx + "steep facet survived");
        continue;
      }
      expected.emplace_back(u, l);
    }
    check(expected.size() == m2.facets.size(), ctx + "facet images do not match the new hull");
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const Facet& g = m2.facets[i];
      check(g.upper == expected[i].first && g.lower == expected[i].second, ctx + "facet image mismatch");
      const Facet* orig = nullptr;
      for (const auto& f : m.facets)
        if (shear(f.upper) == g.upper && shear(f.lower) == g.lower) orig = &f;
      check(orig != nullptr, ctx + "no preimage facet");
      check(1 / g.slope == 1 / orig->slope + 1, ctx + "cotangent law fails");
      check(g.length_squared < orig->length_squared, ctx + "facet did not shrink");
    }
    check(m2.facets.size() <= m.facets.size(), ctx + "facet count grew");
    if (!m.is_quadrant) check(m2.dLR_squared < m.dLR_squared, ctx + "d(L,R) did not decrease");
  }
  return str(checked) + " random WT equations";
}

std::string c10() {
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    auto s = random_quadrant(rng, 10);
    auto v = polygon_metrics(hironaka_polygon(s)).L();
    const Rat alpha = rng.nonzero_rational();
    const std::vector<std::pair<Direction, Point2>> cases{
        {Direction(1, 0, 0), {v.x + v.y - 1, v.y}},
        {Direction(0, 1, 0), {v.x, v.x + v.y - 1}},
        {Direction(1, alpha, 0), {v.x + v.y - 1, 0}},
    };
    for (const auto& [d, want] : cases) {
      auto st = hironaka_polygon(quadratic(s, d), s.n());
      check(st.vertices() == std::vector<Point2>{want},
            to_string(s.poly()) + " at " + to_string(d) + ": got " + pts(st.vertices()) + ", want " + to_string(want));
    }
  }
  return "200 random quadrants x 3 directions";
}

std::string c11() {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    auto s = random_wt(rng, 10, true);
    std::vector<TriPoly> forms;
    for (unsigned k = 0; k + 1 < s.n(); ++k)
      if (!s.level(k).is_zero()) forms.push_back(initial_form(s.level(k)));
    Rat alpha;
    for (bool ok = false; !ok;) {
      alpha = rng.nonzero_rational();
      ok = true;
      for (const auto& f : forms) ok = ok && evaluate(f, 1, alpha, 0) != 0;
    }
    auto tr = quadratic(s, Direction(1, alpha, 0));
    const std::string ctx = to_string(s.poly()) + " at (1:" + to_string(alpha) + ":0): ";
    check(is_polygon_gwt(tr, s.n()), ctx + "not GWT");
    auto m = polygon_metrics(hironaka_polygon(tr, s.n()));
    check(m.is_quadrant && m.left && m.L().y == 0, ctx + "not a quadrant on the x-axis");
  }
  return "100 random plane-cone equations";
}

std::string c12() {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    auto s = random_wt(rng, 10);
    auto phi = random_transvection(rng, 3);
    auto s2 = as_surface(apply_transvection(s.poly(), phi));
    const std::string ctx = to_string(s.poly()) + " under " + to_string(phi) + ": ";
    auto a = polygon_metrics(hironaka_polygon(s)), b = polygon_metrics(hironaka_polygon(s2));
    check(a.left.has_value() == b.left.has_value(), ctx + "Delta emptiness changed");
    if (a.left) check(a.L().y == b.L().y, ctx + "L2 of Delta changed");
    for (unsigned k = 0; k < s.n(); ++k) {
      auto ga = polygon_metrics(level_polygon(s, k)), gb = polygon_metrics(level_polygon(s2, k));
      check(ga.left.has_value() == gb.left.has_value(), ctx + "Gamma emptiness changed");
      if (ga.left) check(ga.L().y == gb.L().y, ctx + "L2 of Gamma[" + str(k) + "] changed");
    }
  }
  return "200 random equations and transvections";
}

std::string c13() {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    auto s = random_wt(rng, 8);
    const Rat alpha = rng.chance(20) ? Rat(0) : rng.nonzero_rational();
    auto phi = random_transvection(rng, 3);
    auto [beta, psi] = factor_direction_through_transvection(alpha, phi);
    auto lhs = apply_transvection(quadratic_substitution(s.poly(), Direction(1, alpha, 0)), psi);
    auto rhs = quadratic_substitution(apply_transvection(s.poly(), phi), Direction(1, beta, 0));
    const std::string ctx = to_string(s.poly()) + ", alpha " + to_string(alpha) + ", phi " + to_string(phi) + ": ";
    check(lhs == rhs, ctx + "routes differ");
    Exponent xn{s.n(), 0, 0};
    check(divide_monomial_exact(lhs, xn) == divide_monomial_exact(rhs, xn), ctx + "routes differ after division");
  }
  return "100 random squares";
}

std::string c14() {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const unsigned r = static_cast<unsigned>(rng.range(0, 3)), s = static_cast<unsigned>(rng.range(1, 4));
    std::vector<Rat> c(static_cast<std::size_t>(rng.range(0, 4)));
    for (auto& x : c) x = rng.chance(30) ? Rat(0) : Rat(rng.coefficient());
    Transvection phi(c);
    // Y - phi(X)
    TriPoly shift = TriPoly::Y() * Rat(2) - apply_transvection(TriPoly::Y(), phi);
    TriPoly a = TriPoly::monomial({r, 0, 0}) * shift.pow(s);
    auto w = detect_generalized_quadrant(a, a.total_degree());
    const std::string ctx = to_string(a) + ": ";
    check(w.r == r && w.s == s && w.phi == phi,
          ctx + "got r=" + str(w.r) + " s=" + str(w.s) + " phi=" + to_string(w.phi));
    check(polygon_metrics(newton_polygon(apply_transvection(a, phi))).is_quadrant, ctx + "not a quadrant after phi");
  }
  return "100 random X^r (Y - phi)^s";
}

std::string c15() {
  Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    auto s = random_gwt_quadrant(rng, 10);
    auto w = explore_worst_case(s, kMaxSteps);
    BigInt b = bound_gwt_quadrant(s);
    BigInt l1 = floor(polygon_metrics(hironaka_polygon(s)).L().x);
    const std::string ctx = to_string(s.poly()) + ": ";
    check(w.depth == l1 && b == l1, ctx + "depth " + str(w.depth) + ", floor(L1) " + l1.get_str());
    auto tr = resolve_trace(s, Strategy::generic(), kMaxSteps);
    check(tr.outcome == Outcome::Dropped && tr.steps.size() == w.depth, ctx + "generic trace length");
    for (const auto& st : tr.steps) {
      auto m = std::get_if<MonoidalStep>(&st.kind);
      check(m && m->axis == Axis::ZX && m->gamma == 0, ctx + "non-monoidal step " + to_string(st.kind));
    }
  }
  return "20 random GWT quadrants";
}

std::string c16() {
  Rng rng(16);
  int checked = 0;
  while (checked < 200) {
    auto s = random_wt(rng, 10);
    TriPoly t;
    const Rat gamma = rng.chance(50) ? Rat(0) : rng.nonzero_rational();
    switch (rng.range(0, 2)) {
      case 0: t = quadratic(s, Direction(1, rng.chance(30) ? Rat(0) : rng.nonzero_rational(), gamma)); break;
      case 1: t = quadratic(s, Direction(0, 1, gamma)); break;
      default:
        if (!permissible(s, Axis::ZX)) continue;
        t = monoidal(s, Axis::ZX, gamma);
    }
    if (t.degree_z() != s.n()) continue;
    ++checked;
    bool drop = *order(t) < s.n();
    bool below = false;
    for (const auto& p : projected_cloud(t, s.n())) below = below || p.x + p.y < 1;
    check(drop == below, to_string(s.poly()) + " -> " + to_string(t));
  }
  return str(checked) + " random transforms";
}

std::string c17() {
  auto st = hironaka_polygon(eq("Z^2-X^3*Y"));
  check(st.vertices() == std::vector<Point2>{{Rat(3, 2), Rat(1, 2)}}, "vertices " + pts(st.vertices()));
  return "quadrant at " + pts(st.vertices());
}

std::string c18() {
  std::vector<CorpusEntry> all = corpus();
  Rng rng(18);
  for (int t = 0; t < 50; ++t) {
    auto s = random_prepared(rng, 12);
    all.push_back({to_string(s.poly()), s});
  }
  int comparisons = 0;
  for (const auto& e : all) {
    auto rep = bound_report(e.surface);
    unsigned d = worst_case_depth(e.surface, kMaxSteps);
    for (const auto& [rule, v] : rep.values) {
      ++comparisons;
      check(v >= d, e.label + ": " + rule_name(rule) + " = " + v.get_str() + " < depth " + str(d));
    }
  }
  return str(static_cast<long>(all.size())) + " instances, " + str(comparisons) + " bound comparisons";
}

struct Entry {
  const char* title;
  std::function<std::string()> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"Delta of Z^3+X^2Z+Y^3-X^4", c1},
      {"projections rho for n=5", c2},
      {"Z^2+X^2+Y^2r: depth and non-plane bound", c3},
      {"Z^n+X^(n-1)Y^(n-1): depth and prepared bound", c4},
      {"Z^n+X^(2n-1)Y^(2n-1): depth, quadrant and prepared bounds", c5},
      {"Z^5+X^2YZ^3+X^3Y^3: prepared, L, R, bound, drop", c6},
      {"Z^2+(X-Y)^3+X^r: facet slope after (1:1:0)", c7},
      {"slope -1 facet persists after (1:0:0)", c8},
      {"facet slope law under (1:0:0)", c9},
      {"quadrant stability", c10},
      {"generic direction gives a GWT quadrant", c11},
      {"transvection invariance of L2", c12},
      {"commuting square through transvections", c13},
      {"generalized quadrant round trip", c14},
      {"GWT quadrant tightness", c15},
      {"multiplicity drop criterion", c16},
      {"Delta of Z^2-X^3Y", c17},
      {"soundness of all bounds", c18},
  };
  return e;
}

}  // namespace

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > criterion_count) {
    r.detail = "no such criterion";
    return r;
  }
  const Entry& e = entries()[static_cast<std::size_t>(id - 1)];
  r.title = e.title;
  try {
    r.detail = e.run();
    r.pass = true;
  } catch (const Failure& f) {
    r.detail = f.what;
  } catch (const std::exception& ex) {
    r.detail = std::string("exception: ") + ex.what();
  }
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace surfres::acceptance
