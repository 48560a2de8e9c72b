// Sparse trivariate polynomials over the rationals.
#pragma once

#include "surfres/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfres {

/// Exponent triple of a monomial X^i Y^j Z^k.
struct Exponent {
  unsigned i = 0;
  unsigned j = 0;
  unsigned k = 0;

  unsigned total() const { return i + j + k; }
  bool divides(const Exponent& other) const { return i <= other.i && j <= other.j && k <= other.k; }

  friend Exponent operator+(const Exponent& a, const Exponent& b) { return {a.i + b.i, a.j + b.j, a.k + b.k}; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Serialization order: Z-degree descending, then X ascending, then Y ascending.
struct CanonicalOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.k != b.k) return a.k > b.k;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class TriPoly {
 public:
  using Terms = std::map<Exponent, Rat, CanonicalOrder>;

  TriPoly() = default;
  TriPoly(const Rat& c);  // NOLINT: constants convert implicitly
  TriPoly(long c) : TriPoly(Rat(c)) {}  // NOLINT

  static TriPoly monomial(const Exponent& e, const Rat& c = 1);
  static TriPoly X() { return monomial({1, 0, 0}); }
  static TriPoly Y() { return monomial({0, 1, 0}); }
  static TriPoly Z() { return monomial({0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the given monomial (zero when absent).
  Rat coeff(const Exponent& e) const;

  /// Adds c to the coefficient of X^i Y^j Z^k, dropping it if it cancels.
  void add_term(const Exponent& e, const Rat& c);

  unsigned degree_z() const;
  unsigned degree_x() const;
  unsigned total_degree() const;

  /// Coefficient of Z^k as a polynomial in X, Y (Z-exponent zero).
  TriPoly z_level(unsigned k) const;

  TriPoly pow(unsigned e) const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const Rat& c);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator-(TriPoly a) { return a *= Rat(-1); }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const Rat& c) { return a *= c; }
  friend TriPoly operator*(const Rat& c, TriPoly a) { return a *= c; }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// A TriPoly whose every term has Z-exponent zero, read as a polynomial in X, Y.
using BiPoly = TriPoly;

/// Minimal total degree of a term; nullopt stands for the infinite order of 0.
std::optional<unsigned> order(const TriPoly& p);

/// Sum of the terms of minimal total degree. Throws ZeroInput on 0.
TriPoly initial_form(const TriPoly& p);

/// Images of X, Y, Z under a ring homomorphism.
struct Substitution {
  TriPoly x = TriPoly::X();
  TriPoly y = TriPoly::Y();
  TriPoly z = TriPoly::Z();
};

TriPoly substitute(const TriPoly& p, const Substitution& sub);

/// p / X^m.i Y^m.j Z^m.k; throws NonDivisible naming the first offending term.
TriPoly divide_monomial_exact(const TriPoly& p, const Exponent& m);

Rat evaluate(const TriPoly& p, const Rat& x, const Rat& y, const Rat& z);

/// Canonical text in the equation grammar, e.g. "Z^5 + X^2*Y*Z^3 + X^3*Y^3".
std::string to_string(const TriPoly& p);
std::string to_string(const Exponent& e);

}  // namespace surfres
