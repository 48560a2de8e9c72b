#include "acceptance/generators.hpp"
#include "surfres/error.hpp"
#include "surfres/newton.hpp"
#include "surfres/parse.hpp"
#include "surfres/surface.hpp"
#include "surfres/tripoly.hpp"
#include "surfres/unipoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace surfres;

namespace {

TriPoly P(const char* s) { return parse_poly(s); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

TriPoly random_poly(acceptance::Rng& rng, unsigned max_deg, int terms) {
  TriPoly p;
  for (int t = 0; t < terms; ++t) {
    unsigned i = rng.range(0, max_deg), j = rng.range(0, max_deg - i), k = rng.range(0, max_deg - i - j);
    p.add_term({i, j, k}, rng.nonzero_rational());
  }
  return p;
}

}  // namespace

TEST_CASE("rationals print canonically") {
  CHECK(to_string(frac(6, 4)) == "3/2");
  CHECK(to_string(frac(3, -6)) == "-1/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(floor(Rat(-1, 2)) == -1);
  CHECK(floor(Rat(7, 3)) == 2);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("order") {
  CHECK(order(P("Z^3 + X^2*Z + Y^3 - X^4")) == 3u);
  CHECK_FALSE(order(TriPoly()).has_value());
  CHECK(order(P("Z^5 + X^2*Y*Z^3 + X^3*Y^3")) == 5u);
}

TEST_CASE("order is additive") {
  acceptance::Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    auto p = random_poly(rng, 5, 4), q = random_poly(rng, 5, 4);
    if (p.is_zero() || q.is_zero()) continue;
    CHECK(*order(p * q) == *order(p) + *order(q));
  }
}

TEST_CASE("initial form") {
  CHECK(initial_form(P("Z^3 + X^2*Z + Y^3 - X^4")) == P("Z^3 + X^2*Z + Y^3"));
  CHECK(initial_form(P("Z^4 + X^3*Y^3")) == P("Z^4"));
  CHECK(initial_form(P("X")) == P("X"));
  CHECK(code_of([] { initial_form(TriPoly()); }) == ErrorCode::ZeroInput);
}

TEST_CASE("substitute") {
  Substitution zx;
  zx.z = P("X*Z");
  CHECK(substitute(P("Z^2"), zx) == P("X^2*Z^2"));
  CHECK(substitute(P("Z^2 - X^3"), zx) == P("X^2*Z^2 - X^3"));
  Substitution shift;
  shift.y = P("Y + X");
  CHECK(substitute(P("(Y-X)^4"), shift) == P("Y^4"));
  auto p = P("3/2*X^2*Y - Z^7 + 4");
  CHECK(substitute(p, Substitution{}) == p);
}

TEST_CASE("substitute agrees with evaluation") {
  acceptance::Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    auto p = random_poly(rng, 4, 5);
    Substitution s{random_poly(rng, 2, 2), random_poly(rng, 2, 2), random_poly(rng, 2, 2)};
    Rat x = rng.nonzero_rational(), y = rng.nonzero_rational(), z = rng.nonzero_rational();
    Rat sx = evaluate(s.x, x, y, z), sy = evaluate(s.y, x, y, z), sz = evaluate(s.z, x, y, z);
    CHECK(evaluate(substitute(p, s), x, y, z) == evaluate(p, sx, sy, sz));
  }
}

TEST_CASE("divide_monomial_exact") {
  CHECK(divide_monomial_exact(P("X^2*Z^2 - X^3"), {2, 0, 0}) == P("Z^2 - X"));
  auto p = P("X*Y + Z");
  CHECK(divide_monomial_exact(p, {0, 0, 0}) == p);
  try {
    divide_monomial_exact(P("X^2*Z + Y"), {1, 0, 0});
    FAIL("expected NON_DIVISIBLE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonDivisible);
    CHECK(std::string(e.what()).find("Y") != std::string::npos);
  }
}

TEST_CASE("multiply then divide round trip") {
  acceptance::Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto p = random_poly(rng, 5, 4);
    Exponent m{static_cast<unsigned>(rng.range(0, 3)), static_cast<unsigned>(rng.range(0, 3)),
               static_cast<unsigned>(rng.range(0, 3))};
    CHECK(divide_monomial_exact(p * TriPoly::monomial(m), m) == p);
  }
}

TEST_CASE("canonical printing and round trip") {
  CHECK(to_string(P("X^3*Y^3 + Z^5 + X^2*Y*Z^3")) == "Z^5 + X^2*Y*Z^3 + X^3*Y^3");
  CHECK(to_string(P("-Z^2 + 3/2*X")) == "-Z^2 + 3/2*X");
  CHECK(to_string(TriPoly()) == "0");
  acceptance::Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    auto p = random_poly(rng, 6, 5);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("parser accepts the grammar") {
  CHECK(P("Z^5 + X^2*Y*Z^3 + X^3*Y^3") == P("  z^5+x^2 y z^3 +x^3*y^3 "));
  CHECK(P("2XY") == P("2*X*Y"));
  CHECK(P("1/2*X - Y") == TriPoly(frac(1, 2)) * TriPoly::X() - TriPoly::Y());
  CHECK(P("(X+Y)^2") == P("X^2 + 2*X*Y + Y^2"));
  CHECK(P("-X") == TriPoly(-1) * TriPoly::X());
  CHECK(P("0") == TriPoly());
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const char* s) -> std::size_t {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  CHECK(offset_of("Z^2 + W") == 6);
  CHECK(offset_of("Z^") == 2);
  CHECK(offset_of("X/0") != std::string::npos);
  CHECK(offset_of("(X+Y") != std::string::npos);
  CHECK(offset_of("") != std::string::npos);
}

TEST_CASE("as_surface") {
  auto s = as_surface(P("Z^5 + X^2*Y*Z^3 + X^3*Y^3"));
  CHECK(s.n() == 5);
  CHECK(s.nu(3) == 3u);
  CHECK(s.nu(0) == 6u);
  CHECK_FALSE(s.nu(1).has_value());
  CHECK(s.is_wt());
  // a_3 = X^2 Y has no X^3 term.
  CHECK_FALSE(s.is_gwt());
  CHECK(s.has_plane_cone());

  auto t = as_surface(P("Z^2 + Y^3"));
  CHECK(t.is_wt());
  CHECK_FALSE(t.is_gwt());

  auto u = as_surface(P("Z^2 + X*Z"));
  CHECK_FALSE(u.is_wt());
  CHECK_FALSE(u.has_plane_cone());

  CHECK(as_surface(P("Z^2 - X^3")).is_gwt());
  CHECK_FALSE(as_surface(P("Z^2 + X^2 + Y^2")).has_plane_cone());
}

TEST_CASE("as_surface rejects non-Weierstrass input") {
  for (const char* s : {"0", "X^2", "2*Z^2 + X^3", "Z^2 + X", "Z^3 + X*Z", "Z^2 + X*Y*Z^3"})
    CHECK(code_of([&] { as_surface(P(s)); }) == ErrorCode::NotWeierstrass);
}

TEST_CASE("surface invariants on random equations") {
  acceptance::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    auto s = acceptance::random_wt(rng, 10);
    CHECK(*order(s.poly()) == s.n());
    for (const auto& [e, c] : s.poly().terms())
      if (e.k < s.n()) CHECK(e.i + e.j >= s.n() - e.k);
  }
}

TEST_CASE("univariate helpers") {
  UniPoly p({Rat(-2), Rat(1)});  // t - 2
  UniPoly q({Rat(1), Rat(0), Rat(1)});
  auto dm = divmod(p * q + UniPoly({Rat(3)}), p);
  CHECK(dm.quotient == q);
  CHECK(dm.remainder == UniPoly({Rat(3)}));
  CHECK(gcd(p * q, p * p) == p);
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());

  // (2t - 1)(t + 3)^2 t (t^2 + 1)
  UniPoly f = UniPoly({Rat(-1), Rat(2)}) * UniPoly({Rat(3), Rat(1)}) * UniPoly({Rat(3), Rat(1)}) *
              UniPoly({Rat(0), Rat(1)}) * q;
  auto rr = rational_roots(f);
  CHECK(rr.roots == std::vector<Rat>{Rat(-3), Rat(0), Rat(1, 2)});
  CHECK(rr.cofactor.monic() == q);
}

TEST_CASE("rational roots match brute force") {
  acceptance::Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    UniPoly f({rng.coefficient()});
    std::vector<Rat> planted;
    for (int r = rng.range(0, 3); r > 0; --r) {
      Rat a = rng.chance(30) ? Rat(0) : rng.nonzero_rational();
      planted.push_back(a);
      f = f * UniPoly({-a, Rat(1)});
    }
    if (rng.chance(50)) f = f * UniPoly({Rat(2), Rat(0), Rat(-1)});  // irrational roots
    auto rr = rational_roots(f);
    std::sort(planted.begin(), planted.end());
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    CHECK(rr.roots == planted);
    for (const Rat& a : rr.roots) CHECK(f(a) == 0);
  }
}
