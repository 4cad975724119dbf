#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srf/pole_code.hpp"

namespace srf {

class ModelError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class ModelKind { E1, E2, H1, H2, B1, B2 };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(const std::string& s);
bool is_pole_model(ModelKind k);
// E1, H1 and B1 fix error valuations exactly; the others bound them below.
bool is_exact_model(ModelKind k);

// Validated description of one error distribution. The random part is the
// locator on which errors are drawn afresh each trial (Lambda, Lambda_m,
// Lambda_i, Lambda_{m,i}, Lambda_e or Lambda_{m,e}); the fixed part is the
// locator of the frozen columns (Lambda_u or Lambda_v), zero for E models.
class ErrorSpec {
public:
  static ErrorSpec e1(const CodeParams& cp, Exponents lambda);
  static ErrorSpec e2(const CodeParams& cp, Exponents lambda_m);
  // epsilon is indexed by point; only entries on the support of lambda_u are read.
  static ErrorSpec h1(const CodeParams& cp, Exponents lambda_i, Exponents lambda_u,
                      std::vector<std::vector<Poly>> epsilon);
  static ErrorSpec h2(const CodeParams& cp, Exponents lambda_mi, Exponents lambda_u,
                      std::vector<std::vector<Poly>> epsilon);
  // frozen is indexed by point; only entries on the support of lambda_v are read.
  static ErrorSpec b1(const CodeParams& cp, const FractionVector& fv, Exponents lambda_e, Exponents lambda_v,
                      std::vector<PoleColumn> frozen);
  static ErrorSpec b2(const CodeParams& cp, const FractionVector& fv, Exponents lambda_me, Exponents lambda_v,
                      std::vector<PoleColumn> frozen);

  ModelKind kind() const { return kind_; }
  const Exponents& random_part() const { return random_; }
  const Exponents& fixed_part() const { return fixed_; }
  // Product of both parts (Lambda or Lambda_m).
  Exponents locator() const;
  const std::vector<std::vector<Poly>>& epsilon() const { return eps_; }
  const std::vector<PoleColumn>& frozen() const { return frozen_; }
  const std::optional<FractionVector>& fraction() const { return fv_; }
  const PoleCodeword& pole_codeword() const { return codeword_; }

private:
  ErrorSpec() = default;
  static ErrorSpec build_hybrid(ModelKind kind, const CodeParams& cp, Exponents rnd, Exponents fixed,
                                std::vector<std::vector<Poly>> eps);
  static ErrorSpec build_pole(ModelKind kind, const CodeParams& cp, const FractionVector& fv, Exponents rnd,
                              Exponents fixed, std::vector<PoleColumn> frozen);

  ModelKind kind_ = ModelKind::E1;
  Exponents random_;
  Exponents fixed_;
  std::vector<std::vector<Poly>> eps_;
  std::vector<PoleColumn> frozen_;
  std::optional<FractionVector> fv_;
  PoleCodeword codeword_;
};

// Uniform ell-vector of residues modulo (x - alpha)^len with valuation exactly
// mu (exact) or at least mu. Taylor coefficient vectors are drawn for
// k = mu, ..., len - 1 in order; the one at k = mu is redrawn until nonzero
// when exact.
std::vector<Poly> random_column(const Field& F, Elem alpha, unsigned len, unsigned mu, std::size_t ell, bool exact,
                                Rng& rng);

// E1, E2, H1, H2: R = C + E with E drawn column by column in point order.
ReceivedWord sample(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng);
ReceivedWord sample_E1(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng);
ReceivedWord sample_E2(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng);
ReceivedWord sample_H1(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng);
ReceivedWord sample_H2(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng);
// B1, B2: the received word around the fraction vector the error spec was built for.
PoleWord sample_pole(const ErrorSpec& spec, const CodeParams& cp, Rng& rng);
PoleWord sample_B1(const ErrorSpec& spec, const CodeParams& cp, Rng& rng);
PoleWord sample_B2(const ErrorSpec& spec, const CodeParams& cp, Rng& rng);

// Frozen fixed columns for hybrid models: epsilon_j of valuation exactly
// lambda_j - lambda_u_j on the support of lambda_u, drawn uniformly.
std::vector<std::vector<Poly>> draw_epsilon(const CodeParams& cp, const Exponents& lambda_u, Rng& rng);
// Hand-crafted fixed columns steering towards the competitor beta*f/g:
// epsilon_j = (x - a_j)^mu_j * w_j with w_j the valuation-0 part of the
// column difference between the two codewords (the 1-vector if they agree).
std::vector<std::vector<Poly>> adversarial_epsilon(const CodeParams& cp, const Exponents& lambda_u,
                                                   const FractionVector& fv, Elem beta);
// Frozen partial received word on the support of lambda_v: vr = mu_j when
// mu_j < nu(g), otherwise vr uniform in (nu(g), lambda_j]; residues uniform
// among reduced canonical ones.
std::vector<PoleColumn> draw_frozen(const CodeParams& cp, const FractionVector& fv, const Exponents& lambda_v,
                                    Rng& rng);

// #Omega_{Lambda, eta, ell} over F_q.
boost::multiprecision::cpp_int omega_count(std::uint64_t q, const Exponents& lambda, const Exponents& eta,
                                           unsigned ell);

}  // namespace srf
