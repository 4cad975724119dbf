#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class BoundError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct BoundValue {
  Rational value;
  // log_q(value); -inf for zero.
  double log_q = 0;
};

BoundValue make_bound(std::uint64_t q, const Rational& v);
double log_base(const Rational& v, std::uint64_t q);
std::string to_string(const Rational& r);  // "num/den"

// l/(l+1) (L - d_f - d_g + 1). Requires L >= d_f + d_g - 1.
Rational t_max(unsigned ell, unsigned L, unsigned d_f, unsigned d_g);
// l/(l+1) (L - d_f - d_g + 1 - 2 t_fixed); throws "negative radius" when 2 t_fixed > L - d_f - d_g + 1.
Rational t_bar_i(unsigned ell, unsigned L, unsigned d_f, unsigned d_g, unsigned t_u);
Rational t_bar_e(unsigned ell, unsigned L, unsigned d_f, unsigned d_g, unsigned t_v);
// Same radii from the redundancy L - d_f - d_g + 1 directly.
Rational t_max_from_gap(unsigned ell, long long gap);
Rational t_bar_from_gap(unsigned ell, long long gap, unsigned t_fixed);
unsigned floor_to_unsigned(const Rational& r);

// Multiplicities nu_alpha(Lambda) of the roots of a locator; zeros are ignored.
using RootMultiplicities = std::vector<unsigned>;

// q^{-(l+1)(t_max - t)} / (q - 1) * prod (1 - q^{-(l + nu)}) / (1 - q^{-l})
BoundValue bound_thm1(std::uint64_t q, unsigned ell, unsigned t, const Rational& tmax, const RootMultiplicities& lambda);
// Same with (1 - q^{-(l+1)}) in the denominators, over the maximal locator.
BoundValue bound_thm2(std::uint64_t q, unsigned ell, unsigned t, const Rational& tmax, const RootMultiplicities& lambda_m);
BoundValue bound_thm1_hybrid(std::uint64_t q, unsigned ell, unsigned t_i, const Rational& tbar_i,
                             const RootMultiplicities& lambda_i);
BoundValue bound_thm2_hybrid(std::uint64_t q, unsigned ell, unsigned t_i, const Rational& tbar_i,
                             const RootMultiplicities& lambda_mi);
// Pole theorems as stated carry no 1/(q - 1) factor; `prefactored` adds it.
BoundValue bound_thm1_poles(std::uint64_t q, unsigned ell, unsigned t_e, const Rational& tbar_e,
                            const RootMultiplicities& lambda_e, bool prefactored = false);
BoundValue bound_thm2_poles(std::uint64_t q, unsigned ell, unsigned t_e, const Rational& tbar_e,
                            const RootMultiplicities& lambda_me, bool prefactored = false);

// prod over roots of (1 - q^{-(l + nu)}) / (1 - q^{-f}).
Rational product_factor(std::uint64_t q, unsigned ell, unsigned f_exponent, const RootMultiplicities& nu);
// 1 / (1 - n / q^f); requires n < q^f.
Rational product_factor_bound(unsigned n, std::uint64_t q, unsigned f_exponent);

// The shorthand q^{-(l+1)(t_max - t)} / q used for quick sizing, and its exponent.
Rational simplified_bound(std::uint64_t q, unsigned ell, const Rational& radius_gap);
Rational simplified_exponent(unsigned ell, const Rational& radius_gap);

}  // namespace srf
