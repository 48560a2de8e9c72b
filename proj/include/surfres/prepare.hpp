// Tchirnhausen, WT -> GWT, and detection of generalized quadrants.
#pragma once

#include "surfres/surface.hpp"
#include "surfres/unipoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfres {

/// Y -> Y + sum_{i>=1} coeffs[i-1] X^i. The empty list is the identity.
class Transvection {
 public:
  Transvection() = default;
  explicit Transvection(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_identity() const { return coeffs_.empty(); }
  /// alpha_i, zero past the end; i >= 1.
  Rat coeff(std::size_t i) const { return i >= 1 && i <= coeffs_.size() ? coeffs_[i - 1] : Rat(0); }

  /// The shift itself as a polynomial in X (no constant term).
  UniPoly as_poly() const;
  /// Drops X-degrees above d.
  Transvection truncated(std::size_t d) const;
  Transvection inverse() const;

  friend bool operator==(const Transvection&, const Transvection&) = default;

 private:
  std::vector<Rat> coeffs_;
};

/// "(a1,a2,...)", "()" for the identity.
std::string to_string(const Transvection& t);

/// Exact substitution Y -> Y + sum alpha_i X^i.
TriPoly apply_transvection(const TriPoly& p, const Transvection& t);

/// a = X^r (Y - phi(X))^s * unit, checked up to X-degree verified_to.
struct GQWitness {
  unsigned r = 0;
  unsigned s = 0;
  Transvection phi;
  unsigned verified_to = 0;
};

struct PreparationReport {
  bool is_prepared = false;
  /// Indexed by k; nullopt for a_k = 0 or a failed detection.
  std::vector<std::optional<GQWitness>> witnesses;
  /// Levels k with a_k != 0 whose detection failed within the bound.
  std::vector<unsigned> unresolved;
  unsigned r_bound = 0;
  Transvection psi;
};

/// Z -> Z - a_{n-1}/n. WT input is returned unchanged.
Surface tchirnhausen(const Surface& s);

/// Y -> Y + alpha X with the least nonnegative integer alpha making every
/// nonzero a_k (k <= n-2) X-regular. Throws NotWt.
std::pair<Surface, Rat> to_gwt(const Surface& s);

/// Throws ZeroInput on a = 0 and NotWithinBound when no witness exists up to
/// X-degree d.
GQWitness detect_generalized_quadrant(const BiPoly& a, unsigned d);

/// Throws NotWt, NotPlaneCone. The degree bound defaults to the total degree
/// of the equation.
PreparationReport preparation_report(const Surface& s, std::optional<unsigned> d = std::nullopt);

}  // namespace surfres
