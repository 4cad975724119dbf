#include "srf/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace srf {

Poly Poly::monomial(Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::x_minus(const Field& F, Elem alpha) { return Poly({F.neg(alpha), 1}); }

Poly add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.add(a.coeff(k), b.coeff(k));
  return Poly(std::move(r));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = F.sub(a.coeff(k), b.coeff(k));
  return Poly(std::move(r));
}

Poly neg(const Field& F, const Poly& a) {
  std::vector<Elem> r(a.coeffs());
  for (auto& c : r) c = F.neg(c);
  return Poly(std::move(r));
}

Poly scale(const Field& F, const Poly& a, Elem c) {
  std::vector<Elem> r(a.coeffs());
  for (auto& x : r) x = F.mul(x, c);
  return Poly(std::move(r));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ac[i], bc[j]));
  }
  return Poly(std::move(r));
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.is_zero()) return {};
  std::vector<Elem> r(k, 0);
  r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
  return Poly(std::move(r));
}

Poly pow(const Field& F, const Poly& a, unsigned e) {
  Poly r = Poly::constant(1);
  Poly b = a;
  while (e) {
    if (e & 1) r = mul(F, r, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return r;
}

Elem eval(const Field& F, const Poly& a, Elem x) {
  Elem r = 0;
  const auto& c = a.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) r = F.add(F.mul(r, x), c[k]);
  return r;
}

DivMod divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> r(a.coeffs());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem lead_inv = F.inv(bc.back());
  std::vector<Elem> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    const Elem c = F.mul(r[k], lead_inv);
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).rem; }

Poly div_exact(const Field& F, const Poly& a, const Poly& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.lead()));
}

Poly gcd(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Poly gcd(const Field& F, std::span<const Poly> polys) {
  Poly g;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? monic(F, p) : gcd(F, g, p);
  }
  if (g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  return g;
}

ExtGcd ext_gcd(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Elem li = F.inv(r0.lead());
  return {scale(F, r0, li), scale(F, s0, li), scale(F, t0, li)};
}

Poly inv_mod(const Field& F, const Poly& a, const Poly& m) {
  Poly ar = rem(F, a, m);
  if (ar.is_zero()) throw std::domain_error("element is not invertible modulo m");
  auto eg = ext_gcd(F, ar, m);
  if (eg.g.degree() != 0) throw std::domain_error("element is not invertible modulo m");
  return rem(F, eg.u, m);
}

unsigned valuation(const Field& F, const Poly& f, Elem alpha) {
  if (f.is_zero()) return kInfiniteValuation;
  // Repeated synthetic division by (x - alpha).
  std::vector<Elem> c(f.coeffs());
  unsigned k = 0;
  while (true) {
    Elem acc = 0;
    std::vector<Elem> q(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = F.add(F.mul(acc, alpha), c[i]);
      if (i > 0) q[i - 1] = acc;
    }
    if (acc != 0) return k;
    c = std::move(q);
    ++k;
  }
}

std::vector<Elem> taylor(const Field& F, const Poly& f, Elem alpha, std::size_t count) {
  std::vector<Elem> out(count, 0);
  std::vector<Elem> c(f.coeffs());
  for (std::size_t k = 0; k < count && !c.empty(); ++k) {
    Elem acc = 0;
    std::vector<Elem> q(c.size() - 1);
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = F.add(F.mul(acc, alpha), c[i]);
      if (i > 0) q[i - 1] = acc;
    }
    out[k] = acc;
    c = std::move(q);
  }
  return out;
}

Poly from_taylor(const Field& F, std::span<const Elem> coeffs, Elem alpha) {
  // Horner in (x - alpha).
  const Poly lin = Poly::x_minus(F, alpha);
  Poly r;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = add(F, mul(F, r, lin), Poly::constant(coeffs[k]));
  return r;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(f.coeff(k));
  }
  return s;
}

Poly parse_poly(const Field& F, std::string_view text) {
  std::vector<Elem> c;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size()) break;
    bool negative = false;
    if (text[i] == '-') {
      negative = true;
      ++i;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i)
      throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    Elem e = F.reduce(v);
    c.push_back(negative ? F.neg(e) : e);
  }
  return Poly(std::move(c));
}

PointSystem::PointSystem(const Field& F, std::vector<Point> points) : F_(F), pts_(std::move(points)) {
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    if (pts_[j].lambda == 0) throw std::invalid_argument("multiplicities must be positive");
    if (pts_[j].alpha >= F.prime()) throw std::invalid_argument("evaluation point outside the field");
    for (std::size_t k = 0; k < j; ++k)
      if (pts_[k].alpha == pts_[j].alpha) throw std::invalid_argument("evaluation points must be distinct");
  }
  M_ = Poly::constant(1);
  for (const auto& pt : pts_) {
    moduli_.push_back(pow(F_, Poly::x_minus(F_, pt.alpha), pt.lambda));
    M_ = mul(F_, M_, moduli_.back());
    L_ += pt.lambda;
  }
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    Poly cof = div_exact(F_, M_, moduli_[j]);
    idempotents_.push_back(mul(F_, cof, inv_mod(F_, cof, moduli_[j])));
  }
}

Exponents PointSystem::lambdas() const {
  Exponents e;
  for (const auto& pt : pts_) e.push_back(pt.lambda);
  return e;
}

Poly PointSystem::reduce(const Poly& f, std::size_t j) const { return rem(F_, f, moduli_[j]); }

std::vector<Poly> PointSystem::residues(const Poly& f) const {
  std::vector<Poly> out;
  out.reserve(pts_.size());
  for (std::size_t j = 0; j < pts_.size(); ++j) out.push_back(reduce(f, j));
  return out;
}

Poly PointSystem::interpolate(std::span<const Poly> residues) const {
  if (residues.size() != pts_.size()) throw std::invalid_argument("one residue per point expected");
  Poly acc;
  for (std::size_t j = 0; j < pts_.size(); ++j) {
    if (residues[j].is_zero()) continue;
    acc = add(F_, acc, mul(F_, reduce(residues[j], j), idempotents_[j]));
  }
  return rem(F_, acc, M_);
}

unsigned PointSystem::truncated_valuation(const Poly& f, std::size_t j) const {
  const unsigned v = valuation(F_, reduce(f, j), pts_[j].alpha);
  return std::min(v, pts_[j].lambda);
}

Poly PointSystem::locator(const Exponents& e) const {
  Poly r = Poly::constant(1);
  for (std::size_t j = 0; j < pts_.size(); ++j)
    if (e[j]) r = mul(F_, r, pow(F_, Poly::x_minus(F_, pts_[j].alpha), e[j]));
  return r;
}

unsigned PointSystem::degree_of(const Exponents& e) const { return total_degree(e); }

bool PointSystem::divides_M(const Exponents& e) const {
  if (e.size() != pts_.size()) return false;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] > pts_[j].lambda) return false;
  return true;
}

Poly crt_interpolate(std::span<const Poly> residues, const PointSystem& ps) { return ps.interpolate(residues); }

std::vector<Exponents> enumerate_divisors(const Exponents& bound) {
  std::vector<Exponents> out;
  Exponents cur(bound.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = bound.size();
    while (k > 0) {
      --k;
      if (cur[k] < bound[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (bound.empty()) return out;
  }
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

std::string exponents_to_string(const Exponents& e) {
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!e[j]) continue;
    if (!s.empty()) s += ',';
    s += std::to_string(j + 1) + ':' + std::to_string(e[j]);
  }
  return s.empty() ? "1" : s;
}

Exponents parse_exponents(std::string_view text, std::size_t n) {
  Exponents e(n, 0);
  std::string s(text);
  std::erase_if(s, [](char c) { return c == ' ' || c == '\t'; });
  if (s.empty() || s == "1") return e;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("exponent entry must be 'j:e': " + item);
    const auto j = std::stoul(item.substr(0, colon));
    const auto v = std::stoul(item.substr(colon + 1));
    if (j == 0 || j > n) throw std::invalid_argument("point index out of range: " + item);
    e[j - 1] += static_cast<unsigned>(v);
  }
  return e;
}

}  // namespace srf
