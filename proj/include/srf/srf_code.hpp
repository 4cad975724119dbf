#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "srf/polynomial.hpp"

namespace srf {

class CodeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Code parameters shared by the pole-free and the pole codes. Both codes
// need d_f + d_g <= L + 1 (equivalently L >= d_f + d_g - 1).
class CodeParams {
public:
  CodeParams(PointSystem ps, unsigned d_f, unsigned d_g, unsigned ell);

  const PointSystem& points() const { return ps_; }
  const Field& field() const { return ps_.field(); }
  std::size_t n() const { return ps_.size(); }
  unsigned L() const { return ps_.L(); }
  unsigned d_f() const { return d_f_; }
  unsigned d_g() const { return d_g_; }
  unsigned ell() const { return ell_; }
  // L - d_f - d_g + 1
  int redundancy() const { return static_cast<int>(L()) - static_cast<int>(d_f_ + d_g_) + 1; }
  // floor((L - d_f - d_g + 1) / 2)
  unsigned unique_radius() const { return static_cast<unsigned>(redundancy() / 2); }

private:
  PointSystem ps_;
  unsigned d_f_;
  unsigned d_g_;
  unsigned ell_;
};

// f_1/g, ..., f_ell/g sharing one denominator.
struct FractionVector {
  std::vector<Poly> f;
  Poly g;

  bool operator==(const FractionVector&) const = default;
};

bool is_reduced(const Field& F, const FractionVector& fv);
// Divides out the common gcd and makes g monic. Throws on g = 0.
FractionVector normalize(const Field& F, const FractionVector& fv);
// Degree bounds, g != 0 and reducedness; throws CodeError naming the violation.
void check_fraction(const FractionVector& fv, const CodeParams& cp);
// True iff f_i * g' == f'_i * g for all i.
bool same_fraction(const Field& F, const FractionVector& a, const FractionVector& b);

// ell x n matrix stored by columns: column j holds ell residues modulo
// (x - alpha_j)^lambda_j.
class ReceivedWord {
public:
  ReceivedWord() = default;
  ReceivedWord(std::size_t ell, std::size_t n) : ell_(ell), cols_(n, std::vector<Poly>(ell)) {}

  std::size_t ell() const { return ell_; }
  std::size_t n() const { return cols_.size(); }
  const Poly& at(std::size_t i, std::size_t j) const { return cols_[j][i]; }
  Poly& at(std::size_t i, std::size_t j) { return cols_[j][i]; }
  const std::vector<Poly>& column(std::size_t j) const { return cols_[j]; }
  std::vector<Poly>& column(std::size_t j) { return cols_[j]; }

  // CRT interpolant of row i.
  Poly row_interpolant(std::size_t i, const PointSystem& ps) const;

  bool operator==(const ReceivedWord&) const = default;

private:
  std::size_t ell_ = 0;
  std::vector<std::vector<Poly>> cols_;
};

// Throws CodeError unless the word matches cp and every entry has degree < lambda_j.
void check_word(const ReceivedWord& w, const CodeParams& cp);

// One line per point: "r_1j ; r_2j ; ... ; r_lj".
std::string to_string(const ReceivedWord& w);
ReceivedWord parse_received_word(const std::string& text, const CodeParams& cp);

// Entry (i, j) = f_i / g mod (x - alpha_j)^lambda_j. Requires gcd(g, M) = 1.
ReceivedWord encode(const FractionVector& fv, const CodeParams& cp);

// min_i truncated valuation of a column (lambda_j for the zero column).
unsigned column_valuation(const PointSystem& ps, std::size_t j, const std::vector<Poly>& col);

// Error locator exponents: lambda_j - mu_j on the error support, 0 elsewhere.
Exponents error_locator(const ReceivedWord& a, const ReceivedWord& b, const CodeParams& cp);
unsigned distance(const ReceivedWord& a, const ReceivedWord& b, const CodeParams& cp);

struct MinDistanceResult {
  unsigned min_distance = 0;
  std::size_t codewords = 0;
  // Distinct reduced fractions mapping to an already seen word.
  std::size_t collisions = 0;
  FractionVector first;
  FractionVector second;
};

inline constexpr double kBruteForceCandidateLimit = 1e7;
inline constexpr double kBruteForcePairLimit = 2e8;

// All reduced fractions with monic g, deg f_i < d_f, deg g < d_g; the
// `with_poles` flag keeps denominators sharing roots with M.
std::vector<FractionVector> enumerate_fractions(const CodeParams& cp, bool with_poles);

// Exact minimum distance of the pole-free code by full enumeration.
MinDistanceResult min_distance_bruteforce(const CodeParams& cp);

}  // namespace srf
