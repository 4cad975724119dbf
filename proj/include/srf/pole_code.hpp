#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srf/srf_code.hpp"

namespace srf {

// Claimed valuation plus an ell-vector of residues modulo (x - alpha_j)^lambda_j.
struct PoleColumn {
  unsigned vr = 0;
  std::vector<Poly> r;

  bool operator==(const PoleColumn&) const = default;
};

// Element of the ambient space of received words. Operations producing a
// PoleWord return reduced representatives unless stated otherwise.
class PoleWord {
public:
  PoleWord() = default;
  explicit PoleWord(std::vector<PoleColumn> cols) : cols_(std::move(cols)) {}

  std::size_t n() const { return cols_.size(); }
  std::size_t ell() const { return cols_.empty() ? 0 : cols_[0].r.size(); }
  const PoleColumn& column(std::size_t j) const { return cols_[j]; }
  PoleColumn& column(std::size_t j) { return cols_[j]; }
  const std::vector<PoleColumn>& columns() const { return cols_; }

  // M_inf exponents (the claimed valuations).
  Exponents valuations() const;
  Poly row_interpolant(std::size_t i, const PointSystem& ps) const;

  bool operator==(const PoleWord&) const = default;

private:
  std::vector<PoleColumn> cols_;
};

using PoleCodeword = PoleWord;

void check_pole_word(const PoleWord& w, const CodeParams& cp);
bool is_reduced(const PoleWord& w, const CodeParams& cp);

// "vr_j ; r_1j ; ... ; r_lj" per point.
std::string to_string(const PoleWord& w);
// Parses and returns the reduced representative.
PoleWord parse_pole_word(const std::string& text, const CodeParams& cp);

// Pole-free words embed with vr_j = 0.
PoleWord to_pole_word(const ReceivedWord& w);

PoleCodeword encode_multiprecision(const FractionVector& fv, const CodeParams& cp);

PoleWord reduce_representative(const PoleWord& w, const CodeParams& cp);

// Truncated valuation of a residue vector at point j (lambda_j for zero).
unsigned vector_valuation(const CodeParams& cp, std::size_t j, const std::vector<Poly>& v);

struct PoleErrorMatrix {
  std::vector<std::vector<Poly>> e;  // column j
  Exponents locator;                 // lambda_j - nu(e_j)
  Exponents truth;                   // nu(e_j)

  unsigned distance() const { return total_degree(locator); }
};

// e_j = (x - a_j)^vr_j r'_j - (x - a_j)^vr'_j r_j mod (x - a_j)^lambda_j, with
// (vr, r) from `a` and (vr', r') from `b`. Computed on the given
// representatives.
PoleErrorMatrix pole_error_matrix(const PoleWord& a, const PoleWord& b, const CodeParams& cp);
unsigned pole_distance(const PoleWord& a, const PoleWord& b, const CodeParams& cp);
bool equivalent(const PoleWord& a, const PoleWord& b, const CodeParams& cp);

// (x - a_j)^vr_j f - g r_j mod (x - a_j)^lambda_j for a received word and a
// fraction vector; same valuations as the error columns against its encoding.
std::vector<Poly> tilde_error(const PoleWord& received, const FractionVector& fv, const CodeParams& cp,
                              std::size_t j);

struct ErrorSupportPartition {
  std::vector<std::size_t> valuation_errors;   // xi_v
  std::vector<std::size_t> evaluation_errors;  // xi_e

  bool operator==(const ErrorSupportPartition&) const = default;
};

ErrorSupportPartition partition_error_support(const PoleWord& received, const PoleCodeword& codeword,
                                              const CodeParams& cp);

// Witness for the subset-sum threshold condition. Indices are 0-based.
struct SubsetSumWitness {
  std::vector<std::size_t> s0;
  std::vector<std::size_t> s_inf;
  std::size_t eta = 0;
  std::size_t gamma = 0;
  unsigned delta0 = 0;
  unsigned delta_inf = 0;

  bool operator==(const SubsetSumWitness&) const = default;
};

inline constexpr std::size_t kSubsetSumMaxPoints = 18;

// Exhaustive search over {none, S0, S_inf}^n (lexicographic, first point most
// significant), then eta, then gamma. Returns the first witness found.
std::optional<SubsetSumWitness> check_subset_sum_constraint(const Exponents& lambdas, unsigned d_f, unsigned d_g);
std::optional<SubsetSumWitness> check_subset_sum_constraint(const CodeParams& cp);
bool verify_subset_sum_witness(const Exponents& lambdas, unsigned d_f, unsigned d_g, const SubsetSumWitness& w);

// The two codewords f_1 1/g and beta f_1 1/g built from a witness.
std::pair<FractionVector, FractionVector> witness_pair(const CodeParams& cp, const SubsetSumWitness& w, Elem beta);

// Exact minimum pole distance over all reduced fractions (poles allowed).
MinDistanceResult min_distance_bruteforce_poles(const CodeParams& cp);

}  // namespace srf
