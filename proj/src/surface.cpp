#include "surfres/surface.hpp"

#include "surfres/error.hpp"

namespace surfres {

bool is_x_regular(const BiPoly& a) {
  auto ord = order(a);
  return ord && a.coeff({*ord, 0, 0}) != 0;
}

Surface as_surface(const TriPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::NotWeierstrass, "zero polynomial");
  const unsigned n = p.degree_z();
  if (n == 0) throw Error(ErrorCode::NotWeierstrass, "no positive power of Z in " + to_string(p));
  if (p.z_level(n) != TriPoly(1))
    throw Error(ErrorCode::NotWeierstrass, "coefficient of Z^" + std::to_string(n) + " is not 1 in " + to_string(p));

  Surface s;
  s.poly_ = p;
  s.n_ = n;
  s.levels_.reserve(n);
  s.nu_.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    BiPoly a = p.z_level(k);
    auto nu = order(a);
    if (nu && *nu < n - k)
      throw Error(ErrorCode::NotWeierstrass, "order of a_" + std::to_string(k) + " is " + std::to_string(*nu) +
                                                 " < " + std::to_string(n - k) + " in " + to_string(p));
    s.levels_.push_back(std::move(a));
    s.nu_.push_back(nu);
  }

  s.is_wt_ = s.levels_[n - 1].is_zero();
  s.is_gwt_ = s.is_wt_;
  for (unsigned k = 0; k + 1 < n && s.is_gwt_; ++k)
    if (!s.levels_[k].is_zero() && !is_x_regular(s.levels_[k])) s.is_gwt_ = false;

  // Plane cone: initial form equals (Z + l/n)^n, l the linear part of a_{n-1}.
  TriPoly linear;
  for (const auto& [e, c] : s.levels_[n - 1].terms())
    if (e.total() == 1) linear.add_term(e, c / Rat(n));
  s.plane_cone_ = initial_form(p) == (TriPoly::Z() + linear).pow(n);
  return s;
}

}  // namespace surfres
