// Algorithm 1 driver: single steps, critical directions, traces and the
// worst case over all branches.
#pragma once

#include "surfres/error.hpp"
#include "surfres/newton.hpp"
#include "surfres/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfres {

struct TraceStep {
  StepKind kind;
  unsigned before_n = 0;
  unsigned after_order = 0;
  TriPoly after_poly;
  /// Delta of the transform, absent once the multiplicity dropped.
  std::optional<Staircase> delta;
};

enum class Outcome { Dropped, Smooth, StepLimit };

const char* outcome_name(Outcome o);

struct Trace {
  Surface initial;
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::StepLimit;
  /// The last equation has order <= 1.
  bool smooth = false;
  std::optional<std::string> warning;
};

class Strategy {
 public:
  enum class Kind { Given, WorstCase, Generic };

  static Strategy given(std::vector<Direction> directions) { return Strategy(Kind::Given, std::move(directions)); }
  static Strategy worst_case() { return Strategy(Kind::WorstCase, {}); }
  static Strategy generic() { return Strategy(Kind::Generic, {}); }

  Kind kind() const { return kind_; }
  /// Consumed in order, one per quadratic step.
  const std::vector<Direction>& directions() const { return directions_; }

 private:
  Strategy(Kind k, std::vector<Direction> d) : kind_(k), directions_(std::move(d)) {}
  Kind kind_;
  std::vector<Direction> directions_;
};

/// Monoidal (Z,X) if permissible, else (Z,Y), else quadratic in `choice`.
/// Throws InvalidArgument for n < 2 and MissingDirection.
TraceStep step(const Surface& s, const std::optional<Direction>& choice);

struct CriticalDirection {
  Direction direction;
  bool persists = false;
  bool generic = false;
  TriPoly transform;
};

struct CriticalDirections {
  /// Persisting candidates and the generic one: (0:1:0) first, then
  /// (1:alpha:0) by increasing alpha.
  std::vector<CriticalDirection> list;
  /// Every candidate examined, in the same order, dropping ones included.
  std::vector<CriticalDirection> examined;
  /// Set when an irrational direction might keep the multiplicity.
  std::optional<std::string> warning;
};

/// Every rational direction whose quadratic transform keeps order n, plus one
/// generic representative. Throws NotWt and InvalidArgument for n < 2.
CriticalDirections critical_directions(const Surface& s);

/// (1:g:0) with g the least nonnegative integer off every ā_k(1,Y) = 0.
Direction generic_direction(const Surface& s);

/// Throws InvalidArgument for max_steps = 0, NotWt for the worst-case and
/// generic strategies, MissingDirection when a given list runs out.
Trace resolve_trace(const Surface& s, const Strategy& strat, unsigned max_steps);

struct WorstCaseResult {
  unsigned depth = 0;
  /// The deepest branch; ties go to the first candidate in list order.
  std::vector<StepKind> path;
  bool irrational_warning = false;
};

class StepLimitError : public Error {
 public:
  StepLimitError(std::vector<StepKind> prefix, unsigned max_steps);
  const std::vector<StepKind>& prefix() const { return prefix_; }

 private:
  std::vector<StepKind> prefix_;
};

/// Exhaustive search over critical directions. Throws NotWt and
/// StepLimitError when some branch needs more than max_steps transforms.
WorstCaseResult explore_worst_case(const Surface& s, unsigned max_steps);

unsigned worst_case_depth(const Surface& s, unsigned max_steps);

}  // namespace surfres
