// Quadratic and monoidal transforms, chart by chart.
#pragma once

#include "surfres/prepare.hpp"
#include "surfres/surface.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace surfres {

/// A point (a:b:c) of the exceptional divisor, normalized so that its first
/// nonzero coordinate is 1.
class Direction {
 public:
  /// Throws InvalidArgument on (0:0:0).
  Direction(const Rat& a, const Rat& b, const Rat& c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rat a_, b_, c_;
};

/// "(a:b:c)".
std::string to_string(const Direction& d);

/// Parses "a:b:c". Throws InvalidArgument.
Direction parse_direction(std::string_view text);

enum class Axis { ZX, ZY };

struct QuadraticStep {
  Direction direction;
  friend bool operator==(const QuadraticStep&, const QuadraticStep&) = default;
};

struct MonoidalStep {
  Axis axis;
  Rat gamma;
  friend bool operator==(const MonoidalStep&, const MonoidalStep&) = default;
};

using StepKind = std::variant<QuadraticStep, MonoidalStep, Transvection>;

/// "quadratic (1:0:0)", "monoidal-zx 0", "transvection (1,2)".
std::string to_string(const StepKind& k);

/// The chart substitution before dividing out the exceptional divisor.
/// Throws ForbiddenDirection for (0:0:1).
TriPoly quadratic_substitution(const TriPoly& p, const Direction& d);

/// Strict transform at the chart origin: the substitution divided by X^n
/// (Y^n in the chart a = 0), n the order of p. Throws ForbiddenDirection.
TriPoly quadratic(const TriPoly& p, const Direction& d);
TriPoly quadratic(const Surface& s, const Direction& d);

/// (Z,X): every cloud point has i + k >= n; (Z,Y) symmetric.
bool permissible(const Surface& s, Axis axis);

/// Z -> X(Z + gamma) and division by X^n (Y for ZY). Throws NotPermissible.
TriPoly monoidal(const Surface& s, Axis axis, const Rat& gamma);

/// (beta, psi) with psi o q_alpha = q_beta o phi, q_t the quadratic chart map
/// in direction (1:t:0).
std::pair<Rat, Transvection> factor_direction_through_transvection(const Rat& alpha, const Transvection& phi);

}  // namespace surfres
