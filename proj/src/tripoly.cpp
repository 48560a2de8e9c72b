#include "surfres/tripoly.hpp"

#include "surfres/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace surfres {

TriPoly::TriPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

TriPoly TriPoly::monomial(const Exponent& e, const Rat& c) {
  TriPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Rat TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void TriPoly::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

unsigned TriPoly::degree_z() const {
  // Canonical order puts the largest Z-exponent first.
  return terms_.empty() ? 0 : terms_.begin()->first.k;
}

unsigned TriPoly::degree_x() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.i);
  return d;
}

unsigned TriPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total());
  return d;
}

TriPoly TriPoly::z_level(unsigned k) const {
  TriPoly out;
  for (const auto& [e, c] : terms_)
    if (e.k == k) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.i, e.j, 0}, c);
  return out;
}

TriPoly TriPoly::pow(unsigned e) const {
  TriPoly result(1);
  TriPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::optional<unsigned> order(const TriPoly& p) {
  if (p.is_zero()) return std::nullopt;
  unsigned m = std::numeric_limits<unsigned>::max();
  for (const auto& [e, c] : p.terms()) m = std::min(m, e.total());
  return m;
}

TriPoly initial_form(const TriPoly& p) {
  auto ord = order(p);
  if (!ord) throw Error(ErrorCode::ZeroInput, "initial form of the zero polynomial");
  TriPoly out;
  for (const auto& [e, c] : p.terms())
    if (e.total() == *ord) out.add_term(e, c);
  return out;
}

namespace {

// Lazily extended table of powers of one polynomial.
class PowerCache {
 public:
  explicit PowerCache(const TriPoly& base) : powers_{TriPoly(1)}, base_(base) {}

  const TriPoly& get(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * base_);
    return powers_[e];
  }

 private:
  std::vector<TriPoly> powers_;
  TriPoly base_;
};

}  // namespace

TriPoly substitute(const TriPoly& p, const Substitution& sub) {
  PowerCache px(sub.x), py(sub.y), pz(sub.z);
  TriPoly out;
  for (const auto& [e, c] : p.terms()) {
    TriPoly term = px.get(e.i) * py.get(e.j);
    term = term * pz.get(e.k);
    term *= c;
    out += term;
  }
  return out;
}

TriPoly divide_monomial_exact(const TriPoly& p, const Exponent& m) {
  TriPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (!m.divides(e))
      throw Error(ErrorCode::NonDivisible, to_string(TriPoly::monomial(e, c)) + " is not divisible by " + to_string(m));
    out.add_term({e.i - m.i, e.j - m.j, e.k - m.k}, c);
  }
  return out;
}

Rat evaluate(const TriPoly& p, const Rat& x, const Rat& y, const Rat& z) {
  Rat sum(0);
  for (const auto& [e, c] : p.terms()) sum += c * pow(x, e.i) * pow(y, e.j) * pow(z, e.k);
  return sum;
}

namespace {

void append_var(std::ostringstream& os, char name, unsigned e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) os << '*';
  os << name;
  if (e > 1) os << '^' << e;
  first_factor = false;
}

}  // namespace

std::string to_string(const Exponent& e) {
  if (e.total() == 0) return "1";
  std::ostringstream os;
  bool first = true;
  append_var(os, 'X', e.i, first);
  append_var(os, 'Y', e.j, first);
  append_var(os, 'Z', e.k, first);
  return os.str();
}

std::string to_string(const TriPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [e, c] : p.terms()) {
    Rat mag = abs(c);
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    if (e.total() == 0) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      os << to_string(e);
    }
  }
  return os.str();
}

}  // namespace surfres
