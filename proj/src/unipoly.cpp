#include "surfres/unipoly.hpp"

#include "surfres/error.hpp"

#include <algorithm>
#include <set>

namespace surfres {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<unsigned> UniPoly::order() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (coeffs_[d] != 0) return static_cast<unsigned>(d);
  return std::nullopt;
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rat(static_cast<long>(i)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> c = coeffs_;
  Rat lead = leading();
  for (auto& v : c) v /= lead;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroInput, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly(), a};
  std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1);
  for (int d = dq; d >= 0; --d) {
    Rat q = rem[static_cast<std::size_t>(d + db)] / b.leading();
    quot[static_cast<std::size_t>(d)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d + i)] -= q * b.coeff(static_cast<std::size_t>(i));
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "rational roots of the zero polynomial");
  std::set<Rat> found;
  UniPoly rest = p;

  // t = 0 first, so the constant term of what remains is nonzero.
  unsigned zero_mult = *rest.order();
  if (zero_mult > 0) {
    found.insert(Rat(0));
    std::vector<Rat> c(rest.coeffs().begin() + zero_mult, rest.coeffs().end());
    rest = UniPoly(std::move(c));
  }

  while (rest.degree() >= 1) {
    // Scale to integer coefficients.
    BigInt lcm_den = 1;
    for (const auto& c : rest.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
    BigInt lead = Rat(rest.leading() * lcm_den).get_num();
    BigInt constant = Rat(rest.coeff(0) * lcm_den).get_num();

    bool progressed = false;
    for (const BigInt& num : positive_divisors(constant)) {
      for (const BigInt& den : positive_divisors(lead)) {
        for (int sign : {1, -1}) {
          Rat candidate(num * sign, den);
          candidate.canonicalize();
          if (rest(candidate) != 0) continue;
          found.insert(candidate);
          rest = divmod(rest, UniPoly({-candidate, Rat(1)})).quotient;
          progressed = true;
          break;
        }
        if (progressed) break;
      }
      if (progressed) break;
    }
    if (!progressed) break;
  }
  return {std::vector<Rat>(found.begin(), found.end()), rest};
}

}  // namespace surfres
