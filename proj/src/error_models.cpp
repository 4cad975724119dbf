#include "srf/error_models.hpp"

namespace srf {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::E1: return "E1";
    case ModelKind::E2: return "E2";
    case ModelKind::H1: return "H1";
    case ModelKind::H2: return "H2";
    case ModelKind::B1: return "B1";
    case ModelKind::B2: return "B2";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& s) {
  for (auto k : {ModelKind::E1, ModelKind::E2, ModelKind::H1, ModelKind::H2, ModelKind::B1, ModelKind::B2})
    if (to_string(k) == s) return k;
  throw ModelError("unknown error model '" + s + "'");
}

bool is_pole_model(ModelKind k) { return k == ModelKind::B1 || k == ModelKind::B2; }
bool is_exact_model(ModelKind k) { return k == ModelKind::E1 || k == ModelKind::H1 || k == ModelKind::B1; }

namespace {

Poly local_power(const CodeParams& cp, std::size_t j, unsigned k) {
  return pow(cp.field(), Poly::x_minus(cp.field(), cp.points().alpha(j)), k);
}

void check_locator(const CodeParams& cp, const Exponents& e, const char* name) {
  if (e.size() != cp.n()) throw ModelError(std::string(name) + " has the wrong number of points");
  if (!cp.points().divides_M(e)) throw ModelError(std::string(name) + " does not divide M");
}

void check_disjoint(const Exponents& a, const Exponents& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > 0 && b[j] > 0) throw ModelError("locator parts are not coprime (shared point " + std::to_string(j + 1) + ")");
}

std::vector<Poly> add_columns(const Field& F, const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(add(F, a[i], b[i]));
  return out;
}

std::vector<Poly> random_residue_vector(const CodeParams& cp, std::size_t j, unsigned len, bool unit, Rng& rng) {
  return random_column(cp.field(), cp.points().alpha(j), len, 0, cp.ell(), unit, rng);
}

}  // namespace

Exponents ErrorSpec::locator() const {
  Exponents e(random_);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += fixed_[j];
  return e;
}

ErrorSpec ErrorSpec::e1(const CodeParams& cp, Exponents lambda) {
  return build_hybrid(ModelKind::E1, cp, std::move(lambda), Exponents(cp.n(), 0), {});
}

ErrorSpec ErrorSpec::e2(const CodeParams& cp, Exponents lambda_m) {
  return build_hybrid(ModelKind::E2, cp, std::move(lambda_m), Exponents(cp.n(), 0), {});
}

ErrorSpec ErrorSpec::h1(const CodeParams& cp, Exponents lambda_i, Exponents lambda_u,
                        std::vector<std::vector<Poly>> epsilon) {
  return build_hybrid(ModelKind::H1, cp, std::move(lambda_i), std::move(lambda_u), std::move(epsilon));
}

ErrorSpec ErrorSpec::h2(const CodeParams& cp, Exponents lambda_mi, Exponents lambda_u,
                        std::vector<std::vector<Poly>> epsilon) {
  return build_hybrid(ModelKind::H2, cp, std::move(lambda_mi), std::move(lambda_u), std::move(epsilon));
}

ErrorSpec ErrorSpec::b1(const CodeParams& cp, const FractionVector& fv, Exponents lambda_e, Exponents lambda_v,
                        std::vector<PoleColumn> frozen) {
  return build_pole(ModelKind::B1, cp, fv, std::move(lambda_e), std::move(lambda_v), std::move(frozen));
}

ErrorSpec ErrorSpec::b2(const CodeParams& cp, const FractionVector& fv, Exponents lambda_me, Exponents lambda_v,
                        std::vector<PoleColumn> frozen) {
  return build_pole(ModelKind::B2, cp, fv, std::move(lambda_me), std::move(lambda_v), std::move(frozen));
}

ErrorSpec ErrorSpec::build_hybrid(ModelKind kind, const CodeParams& cp, Exponents rnd, Exponents fixed,
                                  std::vector<std::vector<Poly>> eps) {
  check_locator(cp, rnd, "random locator part");
  check_locator(cp, fixed, "fixed locator part");
  check_disjoint(rnd, fixed);
  ErrorSpec s;
  s.kind_ = kind;
  s.random_ = std::move(rnd);
  s.fixed_ = std::move(fixed);
  s.eps_.assign(cp.n(), {});
  const auto& ps = cp.points();
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (s.fixed_[j] == 0) continue;
    if (j >= eps.size() || eps[j].size() != cp.ell())
      throw ModelError("missing fixed error column at point " + std::to_string(j + 1));
    for (const auto& x : eps[j])
      if (x.degree() >= static_cast<int>(ps.lambda(j)))
        throw ModelError("fixed error column at point " + std::to_string(j + 1) + " is not reduced");
    if (column_valuation(ps, j, eps[j]) != ps.lambda(j) - s.fixed_[j])
      throw ModelError("fixed error column at point " + std::to_string(j + 1) +
                       " does not have valuation lambda_j - nu(Lambda)");
    s.eps_[j] = std::move(eps[j]);
  }
  return s;
}

ErrorSpec ErrorSpec::build_pole(ModelKind kind, const CodeParams& cp, const FractionVector& fv, Exponents rnd,
                                Exponents fixed, std::vector<PoleColumn> frozen) {
  check_locator(cp, rnd, "evaluation locator part");
  check_locator(cp, fixed, "valuation locator part");
  check_disjoint(rnd, fixed);
  ErrorSpec s;
  s.kind_ = kind;
  s.codeword_ = encode_multiprecision(fv, cp);
  s.fv_ = fv;
  s.random_ = std::move(rnd);
  s.fixed_ = std::move(fixed);
  s.frozen_.assign(cp.n(), {});
  const auto& ps = cp.points();
  for (std::size_t j = 0; j < cp.n(); ++j) {
    const unsigned lam = ps.lambda(j);
    const unsigned ng = s.codeword_.column(j).vr;
    if (s.random_[j] > 0) {
      const unsigned mu = lam - s.random_[j];
      if (mu < ng)
        throw ModelError("evaluation error at point " + std::to_string(j + 1) + " needs mu_j >= nu(g)");
      if (ng > 0 && mu == ng)
        throw ModelError("evaluation error at pole " + std::to_string(j + 1) +
                         " needs mu_j > nu(g) so that received words stay reduced");
    }
    if (s.fixed_[j] == 0) continue;
    const unsigned mu = lam - s.fixed_[j];
    if (mu > ng) throw ModelError("valuation error at point " + std::to_string(j + 1) + " needs mu_j <= nu(g)");
    if (j >= frozen.size() || frozen[j].r.size() != cp.ell())
      throw ModelError("missing frozen received column at point " + std::to_string(j + 1));
    const PoleColumn& c = frozen[j];
    if (c.vr > lam) throw ModelError("frozen valuation exceeds multiplicity at point " + std::to_string(j + 1));
    if (mu < ng && c.vr != mu)
      throw ModelError("frozen column at point " + std::to_string(j + 1) + " must claim valuation mu_j");
    if (mu == ng && c.vr <= ng)
      throw ModelError("frozen column at point " + std::to_string(j + 1) + " must claim valuation above nu(g)");
    for (const auto& x : c.r)
      if (x.degree() >= static_cast<int>(lam))
        throw ModelError("frozen residue at point " + std::to_string(j + 1) + " is not reduced");
    if (c.vr > 0 && vector_valuation(cp, j, c.r) > 0)
      throw ModelError("frozen column at point " + std::to_string(j + 1) + " is not a reduced representative");
    // Store the canonical representative.
    std::vector<PoleColumn> one(cp.n());
    for (std::size_t k = 0; k < cp.n(); ++k) one[k] = {0, std::vector<Poly>(cp.ell())};
    one[j] = c;
    s.frozen_[j] = reduce_representative(PoleWord(std::move(one)), cp).column(j);
  }
  return s;
}

std::vector<Poly> random_column(const Field& F, Elem alpha, unsigned len, unsigned mu, std::size_t ell, bool exact,
                                Rng& rng) {
  std::vector<std::vector<Elem>> tc(ell, std::vector<Elem>(len, 0));
  for (unsigned k = mu; k < len; ++k) {
    bool nonzero = false;
    do {
      for (std::size_t i = 0; i < ell; ++i) {
        tc[i][k] = rng.uniform(F);
        nonzero = nonzero || tc[i][k] != 0;
      }
    } while (exact && k == mu && !nonzero);
  }
  std::vector<Poly> out;
  out.reserve(ell);
  for (auto& c : tc) out.push_back(from_taylor(F, c, alpha));
  return out;
}

ReceivedWord sample(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng) {
  if (is_pole_model(spec.kind())) throw ModelError("pole models produce pole words; use sample_pole");
  const bool exact = is_exact_model(spec.kind());
  const Field& F = cp.field();
  const auto& ps = cp.points();
  ReceivedWord R = C;
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (spec.fixed_part()[j] > 0) {
      R.column(j) = add_columns(F, C.column(j), spec.epsilon()[j]);
    } else if (spec.random_part()[j] > 0) {
      const unsigned lam = ps.lambda(j);
      const auto e = random_column(F, ps.alpha(j), lam, lam - spec.random_part()[j], cp.ell(), exact, rng);
      R.column(j) = add_columns(F, C.column(j), e);
    }
  }
  return R;
}

namespace {
void expect_kind(const ErrorSpec& spec, ModelKind k) {
  if (spec.kind() != k) throw ModelError("sampler for " + to_string(k) + " called with a " + to_string(spec.kind()) + " spec");
}
}  // namespace

ReceivedWord sample_E1(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::E1);
  return sample(spec, C, cp, rng);
}
ReceivedWord sample_E2(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::E2);
  return sample(spec, C, cp, rng);
}
ReceivedWord sample_H1(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::H1);
  return sample(spec, C, cp, rng);
}
ReceivedWord sample_H2(const ErrorSpec& spec, const ReceivedWord& C, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::H2);
  return sample(spec, C, cp, rng);
}

PoleWord sample_pole(const ErrorSpec& spec, const CodeParams& cp, Rng& rng) {
  if (!is_pole_model(spec.kind())) throw ModelError("sample_pole needs a B1 or B2 spec");
  const bool exact = is_exact_model(spec.kind());
  const Field& F = cp.field();
  const auto& ps = cp.points();
  PoleWord R = spec.pole_codeword();
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (spec.fixed_part()[j] > 0) {
      R.column(j) = spec.frozen()[j];
    } else if (spec.random_part()[j] > 0) {
      const unsigned lam = ps.lambda(j);
      const unsigned ng = R.column(j).vr;
      const unsigned mu = lam - spec.random_part()[j];
      const auto d = random_column(F, ps.alpha(j), lam - ng, mu - ng, cp.ell(), exact, rng);
      R.column(j).r = add_columns(F, R.column(j).r, d);
    }
  }
  return R;
}

PoleWord sample_B1(const ErrorSpec& spec, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::B1);
  return sample_pole(spec, cp, rng);
}
PoleWord sample_B2(const ErrorSpec& spec, const CodeParams& cp, Rng& rng) {
  expect_kind(spec, ModelKind::B2);
  return sample_pole(spec, cp, rng);
}

std::vector<std::vector<Poly>> draw_epsilon(const CodeParams& cp, const Exponents& lambda_u, Rng& rng) {
  check_locator(cp, lambda_u, "fixed locator part");
  std::vector<std::vector<Poly>> eps(cp.n());
  const auto& ps = cp.points();
  for (std::size_t j = 0; j < cp.n(); ++j)
    if (lambda_u[j] > 0)
      eps[j] = random_column(cp.field(), ps.alpha(j), ps.lambda(j), ps.lambda(j) - lambda_u[j], cp.ell(), true, rng);
  return eps;
}

std::vector<std::vector<Poly>> adversarial_epsilon(const CodeParams& cp, const Exponents& lambda_u,
                                                   const FractionVector& fv, Elem beta) {
  check_locator(cp, lambda_u, "fixed locator part");
  const Field& F = cp.field();
  const auto& ps = cp.points();
  FractionVector other = fv;
  for (auto& f : other.f) f = scale(F, f, F.reduce(beta));
  const ReceivedWord C = encode(fv, cp);
  const ReceivedWord C2 = encode(normalize(F, other), cp);
  std::vector<std::vector<Poly>> eps(cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (lambda_u[j] == 0) continue;
    const unsigned lam = ps.lambda(j);
    std::vector<Poly> diff;
    for (std::size_t i = 0; i < cp.ell(); ++i) diff.push_back(sub(F, C2.at(i, j), C.at(i, j)));
    const unsigned v = column_valuation(ps, j, diff);
    const Poly up = local_power(cp, j, lam - lambda_u[j]);
    for (std::size_t i = 0; i < cp.ell(); ++i) {
      Poly w = v == lam ? Poly::constant(1) : div_exact(F, diff[i], local_power(cp, j, v));
      eps[j].push_back(ps.reduce(mul(F, up, w), j));
    }
  }
  return eps;
}

std::vector<PoleColumn> draw_frozen(const CodeParams& cp, const FractionVector& fv, const Exponents& lambda_v,
                                    Rng& rng) {
  check_locator(cp, lambda_v, "valuation locator part");
  const auto& ps = cp.points();
  const PoleCodeword C = encode_multiprecision(fv, cp);
  std::vector<PoleColumn> out(cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (lambda_v[j] == 0) continue;
    const unsigned lam = ps.lambda(j);
    const unsigned ng = C.column(j).vr;
    const unsigned mu = lam - lambda_v[j];
    if (mu > ng) throw ModelError("valuation error at point " + std::to_string(j + 1) + " needs mu_j <= nu(g)");
    unsigned vr = mu;
    if (mu == ng) vr = ng + 1 + static_cast<unsigned>(rng.uniform_below(lam - ng));
    out[j].vr = vr;
    if (vr == lam)
      out[j].r.assign(cp.ell(), Poly::constant(1));
    else
      out[j].r = random_residue_vector(cp, j, lam - vr, vr > 0, rng);
  }
  return out;
}

boost::multiprecision::cpp_int omega_count(std::uint64_t q, const Exponents& lambda, const Exponents& eta,
                                           unsigned ell) {
  if (lambda.size() != eta.size() || !divides(eta, lambda)) throw ModelError("eta does not divide Lambda");
  using boost::multiprecision::cpp_int;
  cpp_int total = 1;
  const cpp_int Q = q;
  const cpp_int ql = boost::multiprecision::pow(Q, ell);
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (eta[j] == lambda[j]) continue;
    total *= boost::multiprecision::pow(ql, lambda[j] - eta[j] - 1) * (ql - 1);
  }
  return total;
}

}  // namespace srf
