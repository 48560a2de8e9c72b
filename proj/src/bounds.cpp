#include "surfres/bounds.hpp"

#include "surfres/error.hpp"
#include "surfres/newton.hpp"

namespace surfres {

const char* rule_name(BoundRule r) {
  switch (r) {
    case BoundRule::Nonplane: return "NONPLANE";
    case BoundRule::Quadrant: return "QUADRANT";
    case BoundRule::GwtQuadrant: return "GWT_QUADRANT";
    case BoundRule::Prepared: return "PREPARED";
  }
  return "UNKNOWN";
}

namespace {

void require_wt(const Surface& s) {
  if (!s.is_wt()) throw Error(ErrorCode::NotWt, to_string(s.poly()));
}

PolygonMetrics delta_metrics(const Surface& s) { return polygon_metrics(hironaka_polygon(s)); }

}  // namespace

BigInt bound_nonplane(const Surface& s) {
  if (s.has_plane_cone()) throw Error(ErrorCode::PlaneCone, to_string(s.poly()));
  if (!s.is_gwt()) throw Error(ErrorCode::NotGwt, to_string(s.poly()));
  auto m = delta_metrics(s);
  const Point2& L = m.L();
  if (L == m.R()) return 1;
  return floor(L.y / (1 - L.x));
}

BigInt bound_quadrant(const Surface& s) {
  require_wt(s);
  auto m = delta_metrics(s);
  if (!m.is_quadrant || !m.left) throw Error(ErrorCode::NotQuadrant, to_string(s.poly()));
  return floor(m.L().x) + floor(m.L().y) + s.n();
}

BigInt bound_gwt_quadrant(const Surface& s) {
  if (!s.is_gwt()) throw Error(ErrorCode::NotGwtQuadrant, "not GWT: " + to_string(s.poly()));
  auto m = delta_metrics(s);
  if (!m.is_quadrant || !m.left || m.L().y != 0)
    throw Error(ErrorCode::NotGwtQuadrant, "Delta is not a quadrant on the x-axis: " + to_string(s.poly()));
  return floor(m.L().x);
}

BigInt bound_prepared(const Surface& s) {
  require_wt(s);
  if (!s.has_plane_cone()) throw Error(ErrorCode::NotPlaneCone, to_string(s.poly()));
  for (unsigned k = 0; k < s.n(); ++k)
    if (!polygon_metrics(level_polygon(s, k)).is_quadrant)
      throw Error(ErrorCode::NotPrepared, "Gamma[" + std::to_string(k) + "] is not a quadrant");
  auto m = delta_metrics(s);
  if (!m.left) throw Error(ErrorCode::EmptyPolygon, "Delta of " + to_string(s.poly()));
  return floor(Rat(s.n()) * (m.R().x + m.L().y - 1) + 1);
}

BoundReport bound_report(const Surface& s) {
  BoundReport rep;
  auto attempt = [&](BoundRule rule, BigInt (*fn)(const Surface&)) {
    try {
      rep.values.emplace(rule, fn(s));
    } catch (const Error&) {
    }
  };
  attempt(BoundRule::Nonplane, bound_nonplane);
  attempt(BoundRule::Quadrant, bound_quadrant);
  attempt(BoundRule::GwtQuadrant, bound_gwt_quadrant);
  attempt(BoundRule::Prepared, bound_prepared);
  if (rep.applies(BoundRule::Nonplane)) {
    auto m = delta_metrics(s);
    if (m.L().x != 1) rep.theta_tan = m.L().y / (m.L().x - 1);
  }
  return rep;
}

}  // namespace surfres
