// Weierstrass equations Z^n + sum_{k<n} a_k(X,Y) Z^k with ord(a_k) >= n-k.
#pragma once

#include "surfres/tripoly.hpp"

#include <optional>
#include <vector>

namespace surfres {

class Surface {
 public:
  const TriPoly& poly() const { return poly_; }
  /// Multiplicity; equals both the order and the Z-degree of poly().
  unsigned n() const { return n_; }
  /// a_k as a BiPoly, for k = 0..n-1.
  const BiPoly& level(unsigned k) const { return levels_.at(k); }
  const std::vector<BiPoly>& levels() const { return levels_; }
  /// ord(a_k); nullopt when a_k = 0.
  std::optional<unsigned> nu(unsigned k) const { return nu_.at(k); }

  /// a_{n-1} = 0.
  bool is_wt() const { return is_wt_; }
  /// WT and every nonzero a_k contains X^{nu_k}.
  bool is_gwt() const { return is_gwt_; }

  /// The initial form is Z^n up to a linear change in Z, i.e. the tangent
  /// cone is a plane.
  bool has_plane_cone() const { return plane_cone_; }

  friend bool operator==(const Surface& a, const Surface& b) { return a.poly_ == b.poly_; }

 private:
  friend Surface as_surface(const TriPoly& p);
  Surface() = default;

  TriPoly poly_;
  unsigned n_ = 0;
  std::vector<BiPoly> levels_;
  std::vector<std::optional<unsigned>> nu_;
  bool is_wt_ = false;
  bool is_gwt_ = false;
  bool plane_cone_ = false;
};

/// Validates p as a Weierstrass equation. Throws NotWeierstrass.
Surface as_surface(const TriPoly& p);

/// True when a BiPoly contains the pure power X^{ord(a)}.
bool is_x_regular(const BiPoly& a);

}  // namespace surfres
