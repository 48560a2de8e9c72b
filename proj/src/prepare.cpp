#include "surfres/prepare.hpp"

#include "surfres/error.hpp"
#include "surfres/newton.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace surfres {

Transvection::Transvection(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly Transvection::as_poly() const {
  std::vector<Rat> c(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return UniPoly(std::move(c));
}

Transvection Transvection::truncated(std::size_t d) const {
  if (coeffs_.size() <= d) return *this;
  return Transvection(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + d));
}

Transvection Transvection::inverse() const {
  std::vector<Rat> c = coeffs_;
  for (auto& x : c) x = -x;
  return Transvection(std::move(c));
}

std::string to_string(const Transvection& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.coeffs().size(); ++i) os << (i ? "," : "") << to_string(t.coeffs()[i]);
  os << ')';
  return os.str();
}

namespace {

TriPoly shift_of(const Transvection& t) {
  TriPoly f;
  for (std::size_t i = 1; i <= t.coeffs().size(); ++i) f.add_term({static_cast<unsigned>(i), 0, 0}, t.coeff(i));
  return f;
}

// Coefficient of X^e in a bivariate polynomial, as a polynomial in Y.
std::vector<UniPoly> x_slices(const BiPoly& a, unsigned upto) {
  std::vector<std::vector<Rat>> raw(upto + 1);
  for (const auto& [e, c] : a.terms()) {
    if (e.i > upto) continue;
    auto& row = raw[e.i];
    if (row.size() <= e.j) row.resize(e.j + 1);
    row[e.j] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

UniPoly truncate(const UniPoly& p, std::size_t len) {
  const auto& c = p.coeffs();
  if (c.size() <= len) return p;
  return UniPoly(std::vector<Rat>(c.begin(), c.begin() + len));
}

UniPoly shift_down(const UniPoly& p, unsigned s) {
  const auto& c = p.coeffs();
  for (unsigned t = 0; t < s && t < c.size(); ++t)
    if (c[t] != 0) throw std::logic_error("shift_down: low coefficient not zero");
  if (c.size() <= s) return {};
  return UniPoly(std::vector<Rat>(c.begin() + s, c.end()));
}

// 1/v mod Y^len, v(0) != 0.
UniPoly series_inverse(const UniPoly& v, unsigned len) {
  std::vector<Rat> w(len);
  if (len == 0) return {};
  w[0] = 1 / v.coeff(0);
  for (unsigned m = 1; m < len; ++m) {
    Rat acc = 0;
    for (unsigned i = 1; i <= m; ++i) acc += v.coeff(i) * w[m - i];
    w[m] = -acc * w[0];
  }
  return UniPoly(std::move(w));
}

}  // namespace

TriPoly apply_transvection(const TriPoly& p, const Transvection& t) {
  if (t.is_identity()) return p;
  Substitution sub;
  sub.y = TriPoly::Y() + shift_of(t);
  return substitute(p, sub);
}

Surface tchirnhausen(const Surface& s) {
  if (s.is_wt()) return s;
  Substitution sub;
  sub.z = TriPoly::Z() - s.level(s.n() - 1) * Rat(1, s.n());
  return as_surface(substitute(s.poly(), sub));
}

std::pair<Surface, Rat> to_gwt(const Surface& s) {
  if (!s.is_wt()) throw Error(ErrorCode::NotWt, to_string(s.poly()));
  std::vector<TriPoly> forms;
  for (unsigned k = 0; k + 2 <= s.n(); ++k)
    if (!s.level(k).is_zero()) forms.push_back(initial_form(s.level(k)));
  for (long alpha = 0;; ++alpha) {
    bool ok = std::all_of(forms.begin(), forms.end(),
                          [&](const TriPoly& f) { return evaluate(f, 1, alpha, 0) != 0; });
    if (!ok) continue;
    if (alpha == 0) return {s, Rat(0)};
    return {as_surface(apply_transvection(s.poly(), Transvection({Rat(alpha)}))), Rat(alpha)};
  }
}

GQWitness detect_generalized_quadrant(const BiPoly& a, unsigned d) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "generalized quadrant test of 0");

  GQWitness w;
  w.verified_to = d;
  w.r = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : a.terms()) w.r = std::min(w.r, e.i);
  BiPoly b = divide_monomial_exact(a, {w.r, 0, 0});

  auto slices = x_slices(b, d);
  const unsigned s = *slices[0].order();
  w.s = s;
  if (s == 0) return w;

  // Lift b = c * u in K[[X]][Y] with c = Y^s + ... monic of degree s.
  const UniPoly v = shift_down(slices[0], s);
  const UniPoly vinv = series_inverse(v, s);
  std::vector<UniPoly> c(d + 1), u(d + 1);
  u[0] = v;
  for (unsigned e = 1; e <= d; ++e) {
    UniPoly rhs = slices[e];
    for (unsigned t = 1; t < e; ++t) rhs = rhs - c[t] * u[e - t];
    c[e] = truncate(rhs * vinv, s);
    u[e] = shift_down(rhs - v * c[e], s);
  }

  std::vector<Rat> phi(d);
  for (unsigned e = 1; e <= d; ++e) phi[e - 1] = -c[e].coeff(s - 1) / Rat(s);
  w.phi = Transvection(std::move(phi));

  BiPoly lifted = TriPoly::monomial({0, s, 0});
  for (unsigned e = 1; e <= d; ++e)
    for (std::size_t j = 0; j < c[e].coeffs().size(); ++j)
      lifted.add_term({e, static_cast<unsigned>(j), 0}, c[e].coeffs()[j]);

  BiPoly expected;
  const TriPoly power = (TriPoly::Y() - shift_of(w.phi)).pow(s);
  for (const auto& [e, coef] : power.terms())
    if (e.i <= d) expected.add_term(e, coef);

  if (lifted != expected)
    throw Error(ErrorCode::NotWithinBound, "no transvection up to X-degree " + std::to_string(d) + " makes " +
                                               to_string(a) + " a quadrant");
  return w;
}

PreparationReport preparation_report(const Surface& s, std::optional<unsigned> d) {
  if (!s.is_wt()) throw Error(ErrorCode::NotWt, to_string(s.poly()));
  if (!s.has_plane_cone()) throw Error(ErrorCode::NotPlaneCone, to_string(s.poly()));
  const unsigned bound = d.value_or(s.poly().total_degree());

  PreparationReport rep;
  rep.is_prepared = true;
  rep.witnesses.resize(s.n());
  for (unsigned k = 0; k < s.n(); ++k) {
    const BiPoly& a = s.level(k);
    if (a.is_zero()) continue;
    if (!polygon_metrics(newton_polygon(a)).is_quadrant) rep.is_prepared = false;
    try {
      rep.witnesses[k] = detect_generalized_quadrant(a, bound);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotWithinBound) throw;
      rep.unresolved.push_back(k);
    }
  }
  if (!rep.unresolved.empty()) return rep;

  // Levels with s = 0 are quadrants under every transvection and carry no phi.
  std::vector<const GQWitness*> curved;
  for (const auto& w : rep.witnesses)
    if (w && w->s > 0) curved.push_back(&*w);
  for (std::size_t i = 0; i < curved.size(); ++i)
    for (std::size_t j = i + 1; j < curved.size(); ++j) {
      UniPoly diff = curved[i]->phi.as_poly() - curved[j]->phi.as_poly();
      unsigned mu = diff.is_zero() ? 0 : *diff.order();
      rep.r_bound = std::max(rep.r_bound, mu);
    }
  if (!curved.empty()) {
    const auto& c = curved.front()->phi.coeffs();
    if (c.size() > rep.r_bound) rep.psi = Transvection(std::vector<Rat>(c.begin() + rep.r_bound, c.end()));
  }
  return rep;
}

}  // namespace surfres
