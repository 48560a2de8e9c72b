// Dense univariate polynomials over the rationals.
#pragma once

#include "surfres/rational.hpp"

#include <optional>
#include <vector>

namespace surfres {

class UniPoly {
 public:
  UniPoly() = default;
  /// coeffs[d] is the coefficient of t^d; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rat> coeffs);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  /// Lowest degree with a nonzero coefficient; nullopt for zero.
  std::optional<unsigned> order() const;

  Rat operator()(const Rat& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct RationalRoots {
  /// Distinct rational roots in increasing order.
  std::vector<Rat> roots;
  /// What is left after dividing out every rational root with multiplicity.
  UniPoly cofactor;
};

/// Rational root extraction by the rational root theorem on the
/// integer-normalized polynomial. Input must be nonzero.
RationalRoots rational_roots(const UniPoly& p);

}  // namespace surfres
