#include "srf/bounds.hpp"

#include <cmath>
#include <limits>

namespace srf {

namespace {

Rational qpow_inv(std::uint64_t q, unsigned e) {
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(q), e));
}

double log_abs(const BigInt& x) {
  using boost::multiprecision::msb;
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const BigInt a = abs(x);
  const unsigned bits = static_cast<unsigned>(msb(a)) + 1;
  if (bits <= 1000) return std::log(a.convert_to<double>());
  const unsigned drop = bits - 64;
  const BigInt top = a >> drop;
  return std::log(top.convert_to<double>()) + drop * std::log(2.0);
}

// (l + 1)(radius - t) as a nonnegative integer.
unsigned scaled_gap(unsigned ell, unsigned t, const Rational& radius, const char* what) {
  const Rational g = (radius - Rational(t)) * (ell + 1);
  if (g < 0) throw BoundError(std::string("hypothesis violated: ") + what);
  if (denominator(g) != 1) throw BoundError("radius is not a multiple of 1/(l+1)");
  return numerator(g).convert_to<unsigned>();
}

unsigned degree(const RootMultiplicities& nu) {
  unsigned d = 0;
  for (auto v : nu) d += v;
  return d;
}

void check_q(std::uint64_t q) {
  if (q < 2) throw BoundError("field size must be at least 2");
}

BoundValue generic(std::uint64_t q, unsigned ell, unsigned t, const Rational& radius, const RootMultiplicities& nu,
                   unsigned f_exponent, bool prefactor, const char* radius_name) {
  check_q(q);
  if (ell == 0) throw BoundError("interleaving parameter must be positive");
  if (degree(nu) > t) throw BoundError("hypothesis violated: deg(locator) <= t");
  const unsigned e = scaled_gap(ell, t, radius, radius_name);
  Rational v = qpow_inv(q, e) * product_factor(q, ell, f_exponent, nu);
  if (prefactor) v /= Rational(q - 1);
  return make_bound(q, v);
}

}  // namespace

double log_base(const Rational& v, std::uint64_t q) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  return (log_abs(numerator(v)) - log_abs(denominator(v))) / std::log(static_cast<double>(q));
}

BoundValue make_bound(std::uint64_t q, const Rational& v) { return {v, log_base(v, q)}; }

std::string to_string(const Rational& r) { return numerator(r).str() + "/" + denominator(r).str(); }

Rational t_max_from_gap(unsigned ell, long long gap) {
  if (gap < 0) throw BoundError("need L >= d_f + d_g - 1");
  return Rational(BigInt(ell) * gap, BigInt(ell + 1));
}

Rational t_bar_from_gap(unsigned ell, long long gap, unsigned t_fixed) {
  const long long rest = gap - 2 * static_cast<long long>(t_fixed);
  if (rest < 0) throw BoundError("negative radius: 2 t_fixed exceeds L - d_f - d_g + 1");
  return t_max_from_gap(ell, rest);
}

Rational t_max(unsigned ell, unsigned L, unsigned d_f, unsigned d_g) {
  return t_max_from_gap(ell, static_cast<long long>(L) - d_f - d_g + 1);
}

Rational t_bar_i(unsigned ell, unsigned L, unsigned d_f, unsigned d_g, unsigned t_u) {
  return t_bar_from_gap(ell, static_cast<long long>(L) - d_f - d_g + 1, t_u);
}

Rational t_bar_e(unsigned ell, unsigned L, unsigned d_f, unsigned d_g, unsigned t_v) {
  return t_bar_i(ell, L, d_f, d_g, t_v);
}

unsigned floor_to_unsigned(const Rational& r) {
  if (r < 0) throw BoundError("negative value");
  return BigInt(numerator(r) / denominator(r)).convert_to<unsigned>();
}

Rational product_factor(std::uint64_t q, unsigned ell, unsigned f_exponent, const RootMultiplicities& nu) {
  Rational p = 1;
  const Rational den = Rational(1) - qpow_inv(q, f_exponent);
  for (auto v : nu)
    if (v > 0) p *= (Rational(1) - qpow_inv(q, ell + v)) / den;
  return p;
}

Rational product_factor_bound(unsigned n, std::uint64_t q, unsigned f_exponent) {
  check_q(q);
  const BigInt qf = boost::multiprecision::pow(BigInt(q), f_exponent);
  if (BigInt(n) >= qf) throw BoundError("need n < q^f");
  return Rational(qf, qf - n);
}

BoundValue bound_thm1(std::uint64_t q, unsigned ell, unsigned t, const Rational& tmax, const RootMultiplicities& lambda) {
  return generic(q, ell, t, tmax, lambda, ell, true, "t <= t_max");
}

BoundValue bound_thm2(std::uint64_t q, unsigned ell, unsigned t, const Rational& tmax,
                      const RootMultiplicities& lambda_m) {
  return generic(q, ell, t, tmax, lambda_m, ell + 1, true, "t <= t_max");
}

BoundValue bound_thm1_hybrid(std::uint64_t q, unsigned ell, unsigned t_i, const Rational& tbar_i,
                             const RootMultiplicities& lambda_i) {
  return generic(q, ell, t_i, tbar_i, lambda_i, ell, true, "t_i <= t_bar_i");
}

BoundValue bound_thm2_hybrid(std::uint64_t q, unsigned ell, unsigned t_i, const Rational& tbar_i,
                             const RootMultiplicities& lambda_mi) {
  return generic(q, ell, t_i, tbar_i, lambda_mi, ell + 1, true, "t_i <= t_bar_i");
}

BoundValue bound_thm1_poles(std::uint64_t q, unsigned ell, unsigned t_e, const Rational& tbar_e,
                            const RootMultiplicities& lambda_e, bool prefactored) {
  return generic(q, ell, t_e, tbar_e, lambda_e, ell, prefactored, "t_e <= t_bar_e");
}

BoundValue bound_thm2_poles(std::uint64_t q, unsigned ell, unsigned t_e, const Rational& tbar_e,
                            const RootMultiplicities& lambda_me, bool prefactored) {
  return generic(q, ell, t_e, tbar_e, lambda_me, ell + 1, prefactored, "t_e <= t_bar_e");
}

Rational simplified_exponent(unsigned ell, const Rational& radius_gap) {
  return -(Rational(ell + 1) * radius_gap + 1);
}

Rational simplified_bound(std::uint64_t q, unsigned ell, const Rational& radius_gap) {
  check_q(q);
  const Rational e = Rational(ell + 1) * radius_gap + 1;
  if (denominator(e) != 1 || e < 0) throw BoundError("exponent must be a nonnegative integer");
  return qpow_inv(q, numerator(e).convert_to<unsigned>());
}

}  // namespace srf
