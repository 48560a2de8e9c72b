#include "acceptance/generators.hpp"

#include "surfres/newton.hpp"
#include "surfres/parse.hpp"

namespace surfres::acceptance {

Rat Rng::coefficient(long m) {
  long c = range(1, m);
  return Rat(chance(50) ? c : -c);
}

Rat Rng::nonzero_rational() {
  long p = range(1, 5);
  return frac(chance(50) ? p : -p, range(1, 4));
}

namespace {

TriPoly z_power(unsigned n) { return TriPoly::monomial({0, 0, n}); }

// Ceiling of a nonnegative rational.
unsigned ceil_u(const Rat& q) {
  BigInt f = floor(q);
  if (Rat(f) != q) f += 1;
  return static_cast<unsigned>(f.get_ui());
}

}  // namespace

Surface random_wt(Rng& rng, unsigned max_degree, bool plane_cone) {
  for (;;) {
    const unsigned n = static_cast<unsigned>(rng.range(2, std::min<long>(4, max_degree / 2)));
    TriPoly f = z_power(n);
    for (unsigned k = 0; k + 2 <= n; ++k) {
      if (!rng.chance(70)) continue;
      const unsigned lo = n - k + (plane_cone ? 1 : 0);
      if (lo + k > max_degree) continue;
      long terms = rng.range(1, 3);
      for (long t = 0; t < terms; ++t) {
        unsigned d = static_cast<unsigned>(rng.range(lo, max_degree - k));
        unsigned i = static_cast<unsigned>(rng.range(0, d));
        f.add_term({i, d - i, k}, rng.coefficient());
      }
    }
    if (f.size() > 1) return as_surface(f);
  }
}

Surface random_quadrant(Rng& rng, unsigned max_degree) {
  for (;;) {
    const unsigned n = static_cast<unsigned>(rng.range(2, 4));
    const unsigned k0 = static_cast<unsigned>(rng.range(0, n - 2));
    const unsigned m0 = n - k0;
    const unsigned d0 = static_cast<unsigned>(rng.range(m0, std::max<long>(m0, max_degree / 2)));
    const unsigned i0 = static_cast<unsigned>(rng.range(0, d0));
    const Rat vx = frac(i0, m0), vy = frac(d0 - i0, m0);
    TriPoly f = z_power(n);
    f.add_term({i0, d0 - i0, k0}, rng.coefficient());
    for (unsigned k = 0; k + 2 <= n; ++k) {
      if (!rng.chance(60)) continue;
      const unsigned imin = ceil_u(vx * (n - k)), jmin = ceil_u(vy * (n - k));
      if (imin + jmin + k > max_degree) continue;
      long terms = rng.range(1, 2);
      for (long t = 0; t < terms; ++t) {
        unsigned extra = static_cast<unsigned>(rng.range(0, max_degree - imin - jmin - k));
        unsigned di = static_cast<unsigned>(rng.range(0, extra));
        f.add_term({imin + di, jmin + extra - di, k}, rng.coefficient());
      }
    }
    if (f.total_degree() > max_degree) continue;
    Surface s = as_surface(f);
    if (polygon_metrics(hironaka_polygon(s)).is_quadrant) return s;
  }
}

Surface random_prepared(Rng& rng, unsigned max_degree, unsigned max_n) {
  for (;;) {
    const unsigned n = static_cast<unsigned>(rng.range(2, max_n));
    TriPoly f = z_power(n);
    for (unsigned k = 0; k + 2 <= n; ++k) {
      if (!rng.chance(k == 0 ? 90 : 60)) continue;
      const unsigned lo = n - k + 1;
      if (lo + k > max_degree) continue;
      unsigned d = static_cast<unsigned>(rng.range(lo, std::min<long>(max_degree - k, lo + 4)));
      unsigned i = static_cast<unsigned>(rng.range(0, d));
      unsigned j = d - i;
      f.add_term({i, j, k}, rng.coefficient());
      if (rng.chance(50)) {
        unsigned room = max_degree - k - d;
        if (room == 0) continue;
        unsigned extra = static_cast<unsigned>(rng.range(1, std::min(room, 3u)));
        unsigned di = static_cast<unsigned>(rng.range(0, extra));
        f.add_term({i + di, j + extra - di, k}, rng.coefficient());
      }
    }
    if (f.size() > 1) return as_surface(f);
  }
}

Surface random_gwt_quadrant(Rng& rng, unsigned max_degree) {
  for (;;) {
    const unsigned n = static_cast<unsigned>(rng.range(2, 4));
    const unsigned k0 = static_cast<unsigned>(rng.range(0, n - 2));
    const unsigned m0 = n - k0;
    if (m0 + k0 > max_degree) continue;
    const unsigned i0 = static_cast<unsigned>(rng.range(m0, max_degree - k0));
    const Rat l1 = frac(i0, m0);
    TriPoly f = z_power(n);
    f.add_term({i0, 0, k0}, rng.coefficient());
    for (unsigned k = 0; k + 2 <= n; ++k) {
      // Every nonzero level gets its pure X power first so it stays X-regular.
      if (k != k0 && !rng.chance(50)) continue;
      const unsigned ik = k == k0 ? i0 : ceil_u(l1 * (n - k));
      if (ik + k > max_degree) continue;
      if (k != k0) f.add_term({ik, 0, k}, rng.coefficient());
      if (rng.chance(50) && ik + k < max_degree) {
        unsigned extra = static_cast<unsigned>(rng.range(1, max_degree - ik - k));
        unsigned di = static_cast<unsigned>(rng.range(0, extra));
        f.add_term({ik + di, extra - di, k}, rng.coefficient());
      }
    }
    Surface s = as_surface(f);
    auto m = polygon_metrics(hironaka_polygon(s));
    if (s.is_gwt() && m.is_quadrant && m.left && m.L().y == 0) return s;
  }
}

Transvection random_transvection(Rng& rng, unsigned max_length) {
  std::vector<Rat> c(static_cast<std::size_t>(rng.range(1, max_length)));
  for (auto& x : c) x = rng.chance(25) ? Rat(0) : rng.nonzero_rational();
  return Transvection(std::move(c));
}

std::vector<CorpusEntry> corpus() {
  std::vector<std::string> texts;
  for (int r = 2; r <= 5; ++r) texts.push_back("Z^2+X^2+Y^" + std::to_string(2 * r));
  for (int n = 3; n <= 6; ++n)
    texts.push_back("Z^" + std::to_string(n) + "+X^" + std::to_string(n - 1) + "*Y^" + std::to_string(n - 1));
  for (int n = 2; n <= 4; ++n)
    texts.push_back("Z^" + std::to_string(n) + "+X^" + std::to_string(2 * n - 1) + "*Y^" + std::to_string(2 * n - 1));
  texts.push_back("Z^5+X^2*Y*Z^3+X^3*Y^3");
  texts.push_back("Z^3+X^2*Z+Y^3-X^4");
  for (int r = 4; r <= 8; ++r) texts.push_back("Z^2+(X-Y)^3+X^" + std::to_string(r));
  texts.push_back("Z^3-(X^3*Y^2+X*Y^3+Y^4)*Z+X^9*Y^8");
  for (const char* t : {"Z^2-X^3*Y", "Z^2-X^3", "Z^3-X^7", "Z^2+X^3", "Z^2-X^2", "Z^2+X^2"}) texts.push_back(t);

  std::vector<CorpusEntry> out;
  for (const auto& t : texts) out.push_back({t, as_surface(parse_poly(t))});
  return out;
}

}  // namespace surfres::acceptance
