// Seeded random equations for property checks.
#pragma once

#include "surfres/surface.hpp"
#include "surfres/prepare.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace surfres::acceptance {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]; plain modulo keeps results identical across
  /// standard libraries.
  long range(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool chance(unsigned percent) { return range(0, 99) < static_cast<long>(percent); }
  /// Nonzero integer in [-m, m].
  Rat coefficient(long m = 3);
  /// p/q with |p| <= 5, 1 <= q <= 4, nonzero.
  Rat nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

/// WT equation of total degree <= max_degree with at least one nonzero level.
/// With plane_cone every a_k has order > n - k.
Surface random_wt(Rng& rng, unsigned max_degree, bool plane_cone = false);

/// WT equation whose Delta is a quadrant.
Surface random_quadrant(Rng& rng, unsigned max_degree);

/// WT, plane cone, every Gamma[k] a quadrant.
Surface random_prepared(Rng& rng, unsigned max_degree, unsigned max_n = 3);

/// GWT equation whose Delta is a quadrant with vertex on the x-axis.
Surface random_gwt_quadrant(Rng& rng, unsigned max_degree);

Transvection random_transvection(Rng& rng, unsigned max_length);

/// Fixed instances with a short label, e.g. "Z^2+X^2+Y^4".
struct CorpusEntry {
  std::string label;
  Surface surface;
};

std::vector<CorpusEntry> corpus();

}  // namespace surfres::acceptance
