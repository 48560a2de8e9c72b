#include "acceptance/generators.hpp"
#include "surfres/bounds.hpp"
#include "surfres/error.hpp"
#include "surfres/parse.hpp"
#include "surfres/resolve.hpp"

#include <doctest.h>

using namespace surfres;

namespace {

Surface S(const std::string& s) { return as_surface(parse_poly(s)); }
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

}  // namespace

TEST_CASE("nonplane bound") {
  for (int r = 2; r <= 5; ++r) CHECK(bound_nonplane(S("Z^2 + X^2 + Y^" + str(2 * r))) == r);
  CHECK(bound_nonplane(S("Z^2 + X^2")) == 1);
  CHECK(code_of([] { bound_nonplane(S("Z^2 + X^3")); }) == ErrorCode::PlaneCone);

  auto rep = bound_report(S("Z^2 + X^2 + Y^6"));
  REQUIRE(rep.theta_tan.has_value());
  CHECK(*rep.theta_tan == Rat(-3));
}

TEST_CASE("quadrant bound") {
  for (int n = 2; n <= 4; ++n) CHECK(bound_quadrant(S("Z^" + str(n) + " + X^" + str(2 * n - 1) + "*Y^" + str(2 * n - 1))) == n + 2);
  for (int n = 3; n <= 6; ++n) CHECK(bound_quadrant(S("Z^" + str(n) + " + X^" + str(n - 1) + "*Y^" + str(n - 1))) == n);
  CHECK(bound_quadrant(S("Z^2 - X^3")) == 3);
  CHECK(code_of([] { bound_quadrant(S("Z^2 + X^2 + Y^4")); }) == ErrorCode::NotQuadrant);
  CHECK(code_of([] { bound_quadrant(S("Z^2 + X*Z + Y^4")); }) == ErrorCode::NotWt);
}

TEST_CASE("gwt quadrant bound") {
  CHECK(bound_gwt_quadrant(S("Z^2 - X^3")) == 1);
  CHECK(bound_gwt_quadrant(S("Z^3 - X^7")) == 2);
  CHECK(bound_gwt_quadrant(S("Z^2 - X^2")) == 1);
  CHECK(code_of([] { bound_gwt_quadrant(S("Z^2 - Y^3")); }) == ErrorCode::NotGwtQuadrant);
  CHECK(code_of([] { bound_gwt_quadrant(S("Z^2 - X^3*Y")); }) == ErrorCode::NotGwtQuadrant);
}

TEST_CASE("prepared bound") {
  for (int n = 3; n <= 6; ++n) CHECK(bound_prepared(S("Z^" + str(n) + " + X^" + str(n - 1) + "*Y^" + str(n - 1))) == n - 1);
  for (int n = 2; n <= 4; ++n)
    CHECK(bound_prepared(S("Z^" + str(n) + " + X^" + str(2 * n - 1) + "*Y^" + str(2 * n - 1))) == 3 * n - 1);
  CHECK(bound_prepared(S("Z^5 + X^2*Y*Z^3 + X^3*Y^3")) == 4);
  CHECK(code_of([] { bound_prepared(S("Z^2 + X^2 + Y^4")); }) == ErrorCode::NotPlaneCone);
  CHECK(code_of([] { bound_prepared(S("Z^2 + X*Y*(X - Y)")); }) == ErrorCode::NotPrepared);
}

TEST_CASE("bound report applicability") {
  auto a = bound_report(S("Z^3 + X^5*Y^5"));
  CHECK(a.applies(BoundRule::Quadrant));
  CHECK(a.applies(BoundRule::Prepared));
  CHECK_FALSE(a.applies(BoundRule::Nonplane));
  CHECK_FALSE(a.applies(BoundRule::GwtQuadrant));
  CHECK(a.values.at(BoundRule::Quadrant) == 5);
  CHECK(a.values.at(BoundRule::Prepared) == 8);
  CHECK_FALSE(a.theta_tan.has_value());

  auto b = bound_report(S("Z^3 - X^7"));
  CHECK(b.applies(BoundRule::GwtQuadrant));
  CHECK(b.values.at(BoundRule::GwtQuadrant) == 2);

  CHECK(std::string(rule_name(BoundRule::Prepared)) == "PREPARED");
  CHECK(std::string(rule_name(BoundRule::GwtQuadrant)) == "GWT_QUADRANT");
}

TEST_CASE("neither quadrant nor prepared bound dominates") {
  // prepared smaller: n - 1 against n
  auto a = bound_report(S("Z^4 + X^3*Y^3"));
  CHECK(a.values.at(BoundRule::Prepared) < a.values.at(BoundRule::Quadrant));
  // quadrant smaller: n + 2 against 3n - 1
  auto b = bound_report(S("Z^3 + X^5*Y^5"));
  CHECK(b.values.at(BoundRule::Quadrant) < b.values.at(BoundRule::Prepared));
}

TEST_CASE("bounds are sound on the corpus and random prepared equations") {
  std::vector<Surface> cases;
  for (const auto& e : acceptance::corpus()) cases.push_back(e.surface);
  acceptance::Rng rng(61);
  for (int t = 0; t < 30; ++t) cases.push_back(acceptance::random_prepared(rng, 12));
  for (int t = 0; t < 15; ++t) cases.push_back(acceptance::random_quadrant(rng, 10));
  for (const auto& s : cases) {
    if (!s.is_wt()) continue;
    auto depth = worst_case_depth(s, 64);
    auto rep = bound_report(s);
    for (const auto& [rule, value] : rep.values) {
      auto text = to_string(s.poly());
      CAPTURE(text);
      auto name = rule_name(rule);
      CAPTURE(name);
      CHECK(value >= 1);
      CHECK(BigInt(static_cast<unsigned long>(depth)) <= value);
    }
  }
}
