// Closed-form upper bounds on the number of transforms before the
// multiplicity drops.
#pragma once

#include "surfres/surface.hpp"

#include <map>
#include <optional>

namespace surfres {

enum class BoundRule { Nonplane, Quadrant, GwtQuadrant, Prepared };

const char* rule_name(BoundRule r);

struct BoundReport {
  /// One entry per applicable rule.
  std::map<BoundRule, BigInt> values;
  /// mu/(lambda - 1) for L = (lambda, mu); non-plane cones only.
  std::optional<Rat> theta_tan;

  bool applies(BoundRule r) const { return values.count(r) != 0; }
};

/// 1 if L = R, else floor(mu/(1 - lambda)). Throws PlaneCone, NotGwt.
BigInt bound_nonplane(const Surface& s);

/// floor(L1) + floor(L2) + n. Throws NotWt, NotQuadrant.
BigInt bound_quadrant(const Surface& s);

/// floor(L1). Throws NotGwtQuadrant.
BigInt bound_gwt_quadrant(const Surface& s);

/// floor(n(R1 + L2 - 1) + 1). Throws NotWt, NotPlaneCone, NotPrepared.
BigInt bound_prepared(const Surface& s);

BoundReport bound_report(const Surface& s);

}  // namespace surfres
