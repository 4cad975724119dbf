#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srf/finite_field.hpp"

namespace srf {

// Dense univariate polynomial over F_p, ascending coefficients, no trailing
// zeros. The zero polynomial is the empty list and has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly monomial(Elem c, std::size_t k);
  static Poly x_minus(const Field& F, Elem alpha);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const Poly&) const = default;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

inline constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Elem c);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly shift(const Poly& a, std::size_t k);  // a * x^k
Poly pow(const Field& F, const Poly& a, unsigned e);
Elem eval(const Field& F, const Poly& a, Elem x);

struct DivMod {
  Poly quot;
  Poly rem;
};

// Throws std::domain_error when b is zero.
DivMod divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
// Exact division; throws std::domain_error on a nonzero remainder.
Poly div_exact(const Field& F, const Poly& a, const Poly& b);

Poly monic(const Field& F, const Poly& a);

// Monic gcd; gcd(0, 0) throws std::domain_error.
Poly gcd(const Field& F, const Poly& a, const Poly& b);
Poly gcd(const Field& F, std::span<const Poly> polys);

struct ExtGcd {
  Poly g;  // monic
  Poly u;
  Poly v;  // u*a + v*b = g
};
ExtGcd ext_gcd(const Field& F, const Poly& a, const Poly& b);

// Inverse of a modulo m; throws std::domain_error when not invertible.
Poly inv_mod(const Field& F, const Poly& a, const Poly& m);

// Largest k with (x - alpha)^k | f; kInfiniteValuation for f = 0.
unsigned valuation(const Field& F, const Poly& f, Elem alpha);

// First `count` Taylor coefficients of f around alpha.
std::vector<Elem> taylor(const Field& F, const Poly& f, Elem alpha, std::size_t count);
// sum_k coeffs[k] (x - alpha)^k
Poly from_taylor(const Field& F, std::span<const Elem> coeffs, Elem alpha);

// Space separated decimal coefficients, ascending; "0" for zero.
std::string to_string(const Poly& f);
Poly parse_poly(const Field& F, std::string_view text);

// Exponent vector over the points of a PointSystem.
using Exponents = std::vector<unsigned>;

struct Point {
  Elem alpha;
  unsigned lambda;
};

// Evaluation points with multiplicities, M = prod (x - alpha_j)^lambda_j.
class PointSystem {
public:
  PointSystem(const Field& F, std::vector<Point> points);

  const Field& field() const { return F_; }
  std::size_t size() const { return pts_.size(); }
  const std::vector<Point>& points() const { return pts_; }
  Elem alpha(std::size_t j) const { return pts_[j].alpha; }
  unsigned lambda(std::size_t j) const { return pts_[j].lambda; }
  Exponents lambdas() const;
  unsigned L() const { return L_; }
  const Poly& M() const { return M_; }
  const Poly& modulus(std::size_t j) const { return moduli_[j]; }

  Poly reduce(const Poly& f, std::size_t j) const;
  std::vector<Poly> residues(const Poly& f) const;
  // Unique R with deg R < L and R = residues[j] mod (x - alpha_j)^lambda_j.
  Poly interpolate(std::span<const Poly> residues) const;

  // min(valuation at alpha_j, lambda_j); well defined on residues.
  unsigned truncated_valuation(const Poly& f, std::size_t j) const;

  // prod (x - alpha_j)^e_j
  Poly locator(const Exponents& e) const;
  unsigned degree_of(const Exponents& e) const;
  // True when every e_j <= lambda_j.
  bool divides_M(const Exponents& e) const;

private:
  Field F_;
  std::vector<Point> pts_;
  unsigned L_ = 0;
  Poly M_;
  std::vector<Poly> moduli_;
  std::vector<Poly> idempotents_;  // = 1 mod modulus(j), = 0 mod the others
};

Poly crt_interpolate(std::span<const Poly> residues, const PointSystem& ps);

// All exponent vectors 0 <= e_j <= bound_j, lexicographic (first index most
// significant).
std::vector<Exponents> enumerate_divisors(const Exponents& bound);

unsigned total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);
// Serialized as "j:e" pairs (1-based j, zero entries omitted), comma separated.
std::string exponents_to_string(const Exponents& e);
Exponents parse_exponents(std::string_view text, std::size_t n);

}  // namespace srf
