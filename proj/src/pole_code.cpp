#include "srf/pole_code.hpp"

#include <functional>
#include <sstream>

#include "codebook.hpp"

namespace srf {

namespace {

std::vector<Poly> ones(std::size_t ell) { return std::vector<Poly>(ell, Poly::constant(1)); }

Poly local_power(const CodeParams& cp, std::size_t j, unsigned k) {
  return pow(cp.field(), Poly::x_minus(cp.field(), cp.points().alpha(j)), k);
}

// r truncated modulo (x - alpha_j)^(lambda_j - vr); the 1-vector when vr = lambda_j.
std::vector<Poly> canonical_residue(const CodeParams& cp, std::size_t j, unsigned vr, const std::vector<Poly>& r) {
  const unsigned lam = cp.points().lambda(j);
  if (vr == lam) return ones(r.size());
  const Poly m = local_power(cp, j, lam - vr);
  std::vector<Poly> out;
  out.reserve(r.size());
  for (const auto& x : r) out.push_back(rem(cp.field(), x, m));
  return out;
}

}  // namespace

Exponents PoleWord::valuations() const {
  Exponents v;
  v.reserve(cols_.size());
  for (const auto& c : cols_) v.push_back(c.vr);
  return v;
}

Poly PoleWord::row_interpolant(std::size_t i, const PointSystem& ps) const {
  std::vector<Poly> res;
  res.reserve(cols_.size());
  for (const auto& c : cols_) res.push_back(c.r[i]);
  return ps.interpolate(res);
}

void check_pole_word(const PoleWord& w, const CodeParams& cp) {
  if (w.n() != cp.n()) throw CodeError("pole word has " + std::to_string(w.n()) + " points, expected " + std::to_string(cp.n()));
  for (std::size_t j = 0; j < w.n(); ++j) {
    const auto& c = w.column(j);
    const unsigned lam = cp.points().lambda(j);
    if (c.r.size() != cp.ell()) throw CodeError("pole word column " + std::to_string(j + 1) + " has wrong length");
    if (c.vr > lam) throw CodeError("claimed valuation exceeds multiplicity at point " + std::to_string(j + 1));
    for (const auto& x : c.r)
      if (x.degree() >= static_cast<int>(lam))
        throw CodeError("residue at point " + std::to_string(j + 1) + " is not reduced modulo its local modulus");
  }
}

unsigned vector_valuation(const CodeParams& cp, std::size_t j, const std::vector<Poly>& v) {
  return column_valuation(cp.points(), j, v);
}

bool is_reduced(const PoleWord& w, const CodeParams& cp) {
  for (std::size_t j = 0; j < w.n(); ++j) {
    const auto& c = w.column(j);
    if (c.vr > 0 && vector_valuation(cp, j, c.r) > 0) return false;
  }
  return true;
}

std::string to_string(const PoleWord& w) {
  std::ostringstream os;
  for (const auto& c : w.columns()) {
    os << c.vr;
    for (const auto& x : c.r) os << " ; " << to_string(x);
    os << '\n';
  }
  return os.str();
}

PoleWord parse_pole_word(const std::string& text, const CodeParams& cp) {
  const auto lines = content_lines(text);
  if (lines.size() != cp.n())
    throw CodeError("pole word has " + std::to_string(lines.size()) + " lines, expected " + std::to_string(cp.n()));
  std::vector<PoleColumn> cols(cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    const auto fields = split_fields(lines[j], ';');
    if (fields.size() != cp.ell() + 1)
      throw CodeError("line " + std::to_string(j + 1) + " must hold a valuation and " + std::to_string(cp.ell()) +
                      " residues");
    long long vr = 0;
    try {
      vr = std::stoll(fields[0]);
    } catch (const std::exception&) {
      throw CodeError("bad valuation on line " + std::to_string(j + 1));
    }
    if (vr < 0 || vr > static_cast<long long>(cp.points().lambda(j)))
      throw CodeError("valuation out of range on line " + std::to_string(j + 1));
    cols[j].vr = static_cast<unsigned>(vr);
    for (std::size_t i = 0; i < cp.ell(); ++i)
      cols[j].r.push_back(cp.points().reduce(parse_poly(cp.field(), fields[i + 1]), j));
  }
  return reduce_representative(PoleWord(std::move(cols)), cp);
}

PoleWord to_pole_word(const ReceivedWord& w) {
  std::vector<PoleColumn> cols;
  for (std::size_t j = 0; j < w.n(); ++j) cols.push_back({0, w.column(j)});
  return PoleWord(std::move(cols));
}

PoleCodeword encode_multiprecision(const FractionVector& fv, const CodeParams& cp) {
  check_fraction(fv, cp);
  const Field& F = cp.field();
  const auto& ps = cp.points();
  std::vector<PoleColumn> cols(cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    const unsigned lam = ps.lambda(j);
    const unsigned v = ps.truncated_valuation(fv.g, j);
    cols[j].vr = v;
    if (v == lam) {
      cols[j].r = ones(cp.ell());
      continue;
    }
    const Poly m = local_power(cp, j, lam - v);
    const Poly unit = div_exact(F, fv.g, local_power(cp, j, v));
    const Poly uinv = inv_mod(F, rem(F, unit, m), m);
    for (const auto& f : fv.f) cols[j].r.push_back(rem(F, mul(F, f, uinv), m));
  }
  return PoleWord(std::move(cols));
}

PoleWord reduce_representative(const PoleWord& w, const CodeParams& cp) {
  check_pole_word(w, cp);
  const Field& F = cp.field();
  std::vector<PoleColumn> cols(w.n());
  for (std::size_t j = 0; j < w.n(); ++j) {
    const auto& c = w.column(j);
    const unsigned eta = std::min(c.vr, vector_valuation(cp, j, c.r));
    const Poly d = local_power(cp, j, eta);
    std::vector<Poly> r;
    for (const auto& x : c.r) r.push_back(div_exact(F, x, d));
    cols[j].vr = c.vr - eta;
    cols[j].r = canonical_residue(cp, j, cols[j].vr, r);
  }
  return PoleWord(std::move(cols));
}

PoleErrorMatrix pole_error_matrix(const PoleWord& a, const PoleWord& b, const CodeParams& cp) {
  check_pole_word(a, cp);
  check_pole_word(b, cp);
  const Field& F = cp.field();
  const auto& ps = cp.points();
  PoleErrorMatrix out;
  for (std::size_t j = 0; j < cp.n(); ++j) {
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    const Poly pa = local_power(cp, j, ca.vr);
    const Poly pb = local_power(cp, j, cb.vr);
    std::vector<Poly> e;
    for (std::size_t i = 0; i < cp.ell(); ++i)
      e.push_back(ps.reduce(sub(F, mul(F, pa, cb.r[i]), mul(F, pb, ca.r[i])), j));
    const unsigned mu = vector_valuation(cp, j, e);
    out.truth.push_back(mu);
    out.locator.push_back(ps.lambda(j) - mu);
    out.e.push_back(std::move(e));
  }
  return out;
}

unsigned pole_distance(const PoleWord& a, const PoleWord& b, const CodeParams& cp) {
  return pole_error_matrix(reduce_representative(a, cp), reduce_representative(b, cp), cp).distance();
}

bool equivalent(const PoleWord& a, const PoleWord& b, const CodeParams& cp) {
  return pole_error_matrix(a, b, cp).distance() == 0;
}

std::vector<Poly> tilde_error(const PoleWord& received, const FractionVector& fv, const CodeParams& cp,
                              std::size_t j) {
  const Field& F = cp.field();
  const auto& c = received.column(j);
  const Poly p = local_power(cp, j, c.vr);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < cp.ell(); ++i)
    out.push_back(cp.points().reduce(sub(F, mul(F, p, fv.f[i]), mul(F, fv.g, c.r[i])), j));
  return out;
}

ErrorSupportPartition partition_error_support(const PoleWord& received, const PoleCodeword& codeword,
                                              const CodeParams& cp) {
  const auto em = pole_error_matrix(received, codeword, cp);
  ErrorSupportPartition part;
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (em.locator[j] == 0) continue;
    if (received.column(j).vr != codeword.column(j).vr)
      part.valuation_errors.push_back(j);
    else
      part.evaluation_errors.push_back(j);
  }
  return part;
}

std::optional<SubsetSumWitness> check_subset_sum_constraint(const Exponents& lambdas, unsigned d_f, unsigned d_g) {
  const std::size_t n = lambdas.size();
  if (n > kSubsetSumMaxPoints)
    throw CodeError("instance too large: exhaustive subset-sum search is limited to " +
                    std::to_string(kSubsetSumMaxPoints) + " points");
  if (d_f == 0 || d_g == 0) throw CodeError("degree bounds must be positive");
  if (total_degree(lambdas) + 2 <= d_f + d_g) return std::nullopt;

  const long long target0 = static_cast<long long>(d_f) - 1;
  const long long targetInf = static_cast<long long>(d_g) - 1;
  std::vector<int> assign(n, 0);
  std::optional<SubsetSumWitness> found;

  auto finish = [&](long long sum0, long long sumInf) {
    const long long delta0 = target0 - sum0;
    const long long deltaInf = targetInf - sumInf;
    for (std::size_t eta = 0; eta < n; ++eta) {
      if (assign[eta] != 0 || delta0 >= static_cast<long long>(lambdas[eta])) continue;
      for (std::size_t gamma = 0; gamma < n; ++gamma) {
        if (assign[gamma] != 0 || deltaInf >= static_cast<long long>(lambdas[gamma])) continue;
        if (delta0 > 0 && deltaInf > 0 && eta == gamma) continue;
        SubsetSumWitness w;
        for (std::size_t j = 0; j < n; ++j) {
          if (assign[j] == 1) w.s0.push_back(j);
          if (assign[j] == 2) w.s_inf.push_back(j);
        }
        w.eta = eta;
        w.gamma = gamma;
        w.delta0 = static_cast<unsigned>(delta0);
        w.delta_inf = static_cast<unsigned>(deltaInf);
        found = w;
        return true;
      }
    }
    return false;
  };

  std::function<bool(std::size_t, long long, long long)> dfs = [&](std::size_t j, long long s0, long long sInf) {
    if (j == n) return finish(s0, sInf);
    // Choices per point, in search order: S_0, neither, S_inf.
    for (int choice : {1, 0, 2}) {
      const long long a = s0 + (choice == 1 ? lambdas[j] : 0);
      const long long b = sInf + (choice == 2 ? lambdas[j] : 0);
      if (a > target0 || b > targetInf) continue;
      assign[j] = choice;
      if (dfs(j + 1, a, b)) return true;
    }
    assign[j] = 0;
    return false;
  };
  dfs(0, 0, 0);
  return found;
}

std::optional<SubsetSumWitness> check_subset_sum_constraint(const CodeParams& cp) {
  return check_subset_sum_constraint(cp.points().lambdas(), cp.d_f(), cp.d_g());
}

bool verify_subset_sum_witness(const Exponents& lambdas, unsigned d_f, unsigned d_g, const SubsetSumWitness& w) {
  const std::size_t n = lambdas.size();
  if (total_degree(lambdas) + 2 <= d_f + d_g) return false;
  std::vector<int> seen(n, 0);
  long long s0 = 0, sInf = 0;
  for (auto j : w.s0) {
    if (j >= n || seen[j]++) return false;
    s0 += lambdas[j];
  }
  for (auto j : w.s_inf) {
    if (j >= n || seen[j]++) return false;
    sInf += lambdas[j];
  }
  if (w.eta >= n || w.gamma >= n || seen[w.eta] || seen[w.gamma]) return false;
  if (static_cast<long long>(d_f) - 1 != s0 + w.delta0 || w.delta0 >= lambdas[w.eta]) return false;
  if (static_cast<long long>(d_g) - 1 != sInf + w.delta_inf || w.delta_inf >= lambdas[w.gamma]) return false;
  if (w.delta0 > 0 && w.delta_inf > 0 && w.eta == w.gamma) return false;
  return true;
}

std::pair<FractionVector, FractionVector> witness_pair(const CodeParams& cp, const SubsetSumWitness& w, Elem beta) {
  const Field& F = cp.field();
  if (!verify_subset_sum_witness(cp.points().lambdas(), cp.d_f(), cp.d_g(), w))
    throw CodeError("not a valid subset-sum witness for this code");
  beta = F.reduce(beta);
  if (beta == 0 || beta == 1) throw CodeError("beta must differ from 0 and 1");
  Poly f1 = local_power(cp, w.eta, w.delta0);
  for (auto j : w.s0) f1 = mul(F, f1, cp.points().modulus(j));
  Poly g = local_power(cp, w.gamma, w.delta_inf);
  for (auto j : w.s_inf) g = mul(F, g, cp.points().modulus(j));
  FractionVector a{std::vector<Poly>(cp.ell(), f1), g};
  FractionVector b{std::vector<Poly>(cp.ell(), scale(F, f1, beta)), g};
  return {a, b};
}

MinDistanceResult min_distance_bruteforce_poles(const CodeParams& cp) {
  const auto fractions = enumerate_fractions(cp, true);
  detail::Codebook book(cp);
  for (const auto& fv : fractions) {
    const PoleCodeword c = encode_multiprecision(fv, cp);
    std::vector<Elem> flat;
    for (std::size_t j = 0; j < cp.n(); ++j) {
      auto col = detail::flatten_column_taylor(cp.field(), cp.points(), j, c.column(j).r);
      flat.insert(flat.end(), col.begin(), col.end());
    }
    book.add(std::move(flat), c.valuations());
  }
  return book.minimum(fractions);
}

}  // namespace srf
