#include "acceptance/generators.hpp"
#include "surfres/error.hpp"
#include "surfres/newton.hpp"
#include "surfres/parse.hpp"
#include "surfres/prepare.hpp"
#include "surfres/resolve.hpp"

#include <doctest.h>

using namespace surfres;

namespace {

TriPoly P(const std::string& s) { return parse_poly(s); }
Surface S(const std::string& s) { return as_surface(P(s)); }
std::string str(int v) { return std::to_string(v); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

bool has(const CriticalDirections& c, const Direction& d) {
  for (const auto& x : c.list)
    if (x.direction == d) return true;
  return false;
}

std::vector<Direction> quadratic_directions(const std::vector<StepKind>& path) {
  std::vector<Direction> out;
  for (const auto& k : path)
    if (auto q = std::get_if<QuadraticStep>(&k)) out.push_back(q->direction);
  return out;
}

// Surfaces visited before the multiplicity drops, start included.
std::vector<Surface> visited(const Trace& t) {
  std::vector<Surface> out{t.initial};
  for (const auto& st : t.steps)
    if (st.after_order >= st.before_n) out.push_back(as_surface(st.after_poly));
  return out;
}

}  // namespace

TEST_CASE("step chooses monoidal transforms first") {
  auto a = step(S("Z^2 - X^3"), std::nullopt);
  CHECK(std::holds_alternative<MonoidalStep>(a.kind));
  CHECK(a.after_poly == P("Z^2 - X"));
  CHECK(a.after_order == 1);
  CHECK_FALSE(a.delta.has_value());

  auto b = step(S("Z^3 + X^5*Y^5"), std::nullopt);
  REQUIRE(std::holds_alternative<MonoidalStep>(b.kind));
  CHECK(std::get<MonoidalStep>(b.kind).axis == Axis::ZX);
  CHECK(b.after_order == 3);
  REQUIRE(b.delta.has_value());

  auto c = step(S("Z^2 - Y^3"), std::nullopt);
  REQUIRE(std::holds_alternative<MonoidalStep>(c.kind));
  CHECK(std::get<MonoidalStep>(c.kind).axis == Axis::ZY);

  auto d = step(S("Z^3 + X^2*Z + Y^3 - X^4"), Direction(1, 0, 0));
  CHECK(std::holds_alternative<QuadraticStep>(d.kind));
  CHECK(d.before_n == 3);

  CHECK(code_of([] { step(S("Z^3 + X^2*Z + Y^3 - X^4"), std::nullopt); }) == ErrorCode::MissingDirection);
  CHECK(code_of([] { step(S("Z + X"), std::nullopt); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("critical directions") {
  auto a = critical_directions(S("Z^2 + X^2 + Y^4"));
  CHECK(a.list.size() == 2);
  CHECK(has(a, Direction(0, 1, 0)));
  CHECK(a.list[0].persists);
  CHECK(a.list[1].generic);
  CHECK_FALSE(a.list[1].persists);
  CHECK_FALSE(a.warning);

  for (int n = 3; n <= 5; ++n) {
    auto b = critical_directions(S("Z^" + str(n) + " + X^" + str(n - 1) + "*Y^" + str(n - 1)));
    REQUIRE(b.list.size() == 3);
    CHECK(b.list[0].direction == Direction(0, 1, 0));
    CHECK(b.list[0].persists);
    CHECK(b.list[1].direction == Direction(1, 0, 0));
    CHECK(b.list[1].persists);
    CHECK(b.list[2].direction == Direction(1, 1, 0));
    CHECK(b.list[2].generic);
    CHECK_FALSE(b.list[2].persists);
  }

  // (0:1:0) gives Z^2 + X^3 Y and keeps order 2; (1:0:0) gives Z^2 + X.
  auto c = critical_directions(S("Z^2 + X^3"));
  CHECK(has(c, Direction(0, 1, 0)));
  for (const auto& x : c.examined)
    if (x.direction == Direction(1, 0, 0)) CHECK_FALSE(x.persists);

  CHECK(code_of([] { critical_directions(S("Z^2 + X*Z + Y^2")); }) == ErrorCode::NotWt);
}

TEST_CASE("critical directions contain every persisting rational direction") {
  acceptance::Rng rng(51);
  for (int t = 0; t < 60; ++t) {
    auto s = rng.chance(50) ? acceptance::random_prepared(rng, 10) : acceptance::random_wt(rng, 10);
    auto c = critical_directions(s);
    CHECK(has(c, Direction(0, 1, 0)) == (*order(quadratic(s, Direction(0, 1, 0))) >= s.n()));
    // A persisting direction left out must behave like the generic representative.
    const Direction* gen = nullptr;
    for (const auto& x : c.list)
      if (x.generic) gen = &x.direction;
    REQUIRE(gen != nullptr);
    TriPoly generic_image = quadratic(s, *gen);
    const bool generic_persists = *order(generic_image) >= s.n();
    for (int p = -6; p <= 6; ++p)
      for (int q = 1; q <= 3; ++q) {
        Direction d(1, frac(p, q), 0);
        TriPoly moved = quadratic(s, d);
        if (*order(moved) < s.n() || has(c, d)) continue;
        REQUIRE(generic_persists);
        CHECK(hironaka_polygon(as_surface(moved)) == hironaka_polygon(as_surface(generic_image)));
      }
    // c != 0 never persists on WT input
    CHECK(*order(quadratic(s.poly(), Direction(1, 0, 1))) < s.n());
    CHECK(*order(quadratic(s.poly(), Direction(0, 1, frac(1, 2)))) < s.n());
  }
}

TEST_CASE("irrational direction warnings") {
  CHECK(critical_directions(S("Z^2 + Y^3 - 2*X^2*Y")).warning.has_value());
  CHECK(critical_directions(S("Z^2 + (Y^2 - 2*X^2)^2")).warning.has_value());
  CHECK_FALSE(critical_directions(S("Z^2 + X^2 + Y^2")).warning.has_value());
  CHECK_FALSE(critical_directions(S("Z^3 + X^2*Y^2")).warning.has_value());
  // Y^2 - 2X^2 is a simple factor of a_0 but its roots do not keep order 2
  CHECK_FALSE(critical_directions(S("Z^2 + Y^2 - 2*X^2")).warning.has_value());
}

TEST_CASE("generic direction") {
  CHECK(generic_direction(S("Z^3 + X^2*Y^2")) == Direction(1, 1, 0));
  CHECK(generic_direction(S("Z^2 + X^2 + Y^4")) == Direction(1, 0, 0));
  CHECK(generic_direction(S("Z^2 + X*Y*(X - Y)*(X - 2*Y)")) == Direction(1, 2, 0));
}

TEST_CASE("traces") {
  auto a = resolve_trace(S("Z^2 + X^2 + Y^4"), Strategy::given({Direction(0, 1, 0), Direction(0, 1, 0)}), 64);
  CHECK(a.outcome == Outcome::Dropped);
  CHECK(a.steps.size() == 2);

  auto b = resolve_trace(S("Z^5 + X^2*Y*Z^3 + X^3*Y^3"), Strategy::given({Direction(1, 1, 0)}), 64);
  CHECK(b.outcome == Outcome::Dropped);
  CHECK(b.steps.size() == 1);
  CHECK(b.smooth);

  for (auto strat : {Strategy::generic(), Strategy::worst_case(), Strategy::given({})}) {
    auto c = resolve_trace(S("Z^2 - X^3"), strat, 64);
    CHECK(c.outcome == Outcome::Dropped);
    CHECK(c.steps.size() == 1);
  }

  auto d = resolve_trace(S("Z + X"), Strategy::generic(), 3);
  CHECK(d.outcome == Outcome::Smooth);
  CHECK(d.steps.empty());

  CHECK(code_of([] { resolve_trace(S("Z^3 + X^2*Y^2"), Strategy::given({}), 5); }) == ErrorCode::MissingDirection);
  CHECK(code_of([] { resolve_trace(S("Z^2 - X^3"), Strategy::generic(), 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { resolve_trace(S("Z^2 + X*Z + Y^3"), Strategy::worst_case(), 5); }) == ErrorCode::NotWt);
}

TEST_CASE("step limits") {
  auto t = resolve_trace(S("Z^3"), Strategy::generic(), 5);
  CHECK(t.outcome == Outcome::StepLimit);
  CHECK(t.steps.size() == 5);

  try {
    worst_case_depth(S("Z^3 + X^9*Y^2"), 2);
    FAIL("expected STEP_LIMIT_EXCEEDED");
  } catch (const StepLimitError& e) {
    CHECK(e.code() == ErrorCode::StepLimitExceeded);
    CHECK(e.prefix().size() == 2);
  }
  // the same surface fits in a larger budget
  CHECK(worst_case_depth(S("Z^3 + X^9*Y^2"), 64) >= 3);

  auto w = resolve_trace(S("Z^3"), Strategy::worst_case(), 4);
  CHECK(w.outcome == Outcome::StepLimit);
  CHECK(w.steps.size() == 4);
}

TEST_CASE("worst case depths") {
  for (int r = 2; r <= 4; ++r) CHECK(worst_case_depth(S("Z^2 + X^2 + Y^" + str(2 * r)), 64) == static_cast<unsigned>(r));
  for (int n = 3; n <= 5; ++n)
    CHECK(worst_case_depth(S("Z^" + str(n) + " + X^" + str(n - 1) + "*Y^" + str(n - 1)), 64) ==
          static_cast<unsigned>(n - 1));
  for (int n = 2; n <= 3; ++n)
    CHECK(worst_case_depth(S("Z^" + str(n) + " + X^" + str(2 * n - 1) + "*Y^" + str(2 * n - 1)), 64) ==
          static_cast<unsigned>(n + 1));
}

TEST_CASE("worst case trace replays the deepest branch") {
  auto s = S("Z^4 + X^3*Y^3");
  auto w = explore_worst_case(s, 64);
  auto t = resolve_trace(s, Strategy::worst_case(), 64);
  CHECK(t.steps.size() == w.depth);
  CHECK(t.outcome == Outcome::Dropped);
  auto g = resolve_trace(s, Strategy::given(quadratic_directions(w.path)), 64);
  CHECK(g.steps.size() == w.depth);
}

TEST_CASE("invariants along traces of prepared equations") {
  acceptance::Rng rng(52);
  for (int t = 0; t < 40; ++t) {
    auto s = acceptance::random_prepared(rng, 12);
    auto w = explore_worst_case(s, 64);
    auto tr = resolve_trace(s, Strategy::given(quadratic_directions(w.path)), 64);
    REQUIRE(tr.outcome == Outcome::Dropped);
    auto surfaces = visited(tr);
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
      const Surface& cur = surfaces[i];
      // monoidal steps may bend the cone; the level polygons stay quadrants
      for (unsigned k = 0; k < cur.n(); ++k) CHECK(polygon_metrics(level_polygon(cur, k)).is_quadrant);
      if (cur.has_plane_cone()) CHECK(preparation_report(cur).is_prepared);
      if (i == 0 || !surfaces[i - 1].has_plane_cone() || !cur.has_plane_cone()) continue;
      auto a = polygon_metrics(hironaka_polygon(surfaces[i - 1]));
      auto b = polygon_metrics(hironaka_polygon(cur));
      Rat before = a.L().y + a.R().x, after = b.L().y + b.R().x;
      CHECK(after <= before);
      if (std::holds_alternative<QuadraticStep>(tr.steps[i - 1].kind)) CHECK(after <= before - frac(1, s.n()));
    }
  }
}

TEST_CASE("quadrants stay quadrants along traces") {
  acceptance::Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    auto s = acceptance::random_quadrant(rng, 10);
    auto tr = resolve_trace(s, Strategy::worst_case(), 64);
    REQUIRE(tr.outcome == Outcome::Dropped);
    for (const auto& x : visited(tr)) CHECK(polygon_metrics(hironaka_polygon(x)).is_quadrant);
  }
}
