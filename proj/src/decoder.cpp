#include "srf/decoder.hpp"

#include <algorithm>

#include "srf/linalg.hpp"

namespace srf {

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::NoNonzeroSolution: return "no-nonzero-solution";
    case FailureReason::GcdDegreeExceedsT: return "gcd-degree-exceeds-t";
    case FailureReason::NumeratorDegree: return "numerator-degree";
    case FailureReason::DenominatorDegree: return "denominator-degree";
    case FailureReason::ReencodeMismatch: return "reencode-mismatch";
  }
  return "unknown";
}

namespace {

KeyEqSystem make_system(const Field& F) {
  return KeyEqSystem{F, 0, Poly(), Poly(), {}, Poly(), 0, 0, 0};
}

void check_t(const CodeParams& cp, unsigned t) {
  if (cp.d_f() + t > cp.L() || cp.d_g() + t > cp.L())
    throw DecodeError("distance parameter too large: need d_f + t <= L and d_g + t <= L");
}

// Successive x^k a rem m for k = 0..count-1, as dense vectors of length deg m.
std::vector<std::vector<Elem>> shifted_remainders(const Field& F, const Poly& a, const Poly& m, std::size_t count) {
  const std::size_t dm = static_cast<std::size_t>(m.degree());
  std::vector<std::vector<Elem>> out;
  out.reserve(count);
  std::vector<Elem> cur(dm, 0);
  const Poly r0 = rem(F, a, m);
  for (std::size_t k = 0; k < r0.size(); ++k) cur[k] = r0.coeff(k);
  // m is monic in every use here.
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(cur);
    if (dm == 0) continue;
    const Elem top = cur[dm - 1];
    for (std::size_t d = dm - 1; d > 0; --d) cur[d] = F.sub(cur[d - 1], F.mul(top, m.coeff(d)));
    cur[0] = F.neg(F.mul(top, m.coeff(0)));
  }
  return out;
}

// Canonical coordinates: psi_l (high..low), ..., psi_1 (high..low), phi (high..low).
std::vector<Elem> canonical_coords(const KeySolution& s, unsigned psi_len, unsigned phi_total) {
  std::vector<Elem> v;
  v.reserve(s.psi.size() * psi_len + phi_total);
  for (std::size_t i = s.psi.size(); i-- > 0;)
    for (unsigned k = psi_len; k-- > 0;) v.push_back(s.psi[i].coeff(k));
  for (unsigned k = phi_total; k-- > 0;) v.push_back(s.phi.coeff(k));
  return v;
}

KeySolution from_coords(const std::vector<Elem>& v, unsigned ell, unsigned psi_len, unsigned phi_total) {
  KeySolution s;
  s.psi.resize(ell);
  std::size_t pos = 0;
  for (std::size_t i = ell; i-- > 0;) {
    std::vector<Elem> c(psi_len, 0);
    for (unsigned k = psi_len; k-- > 0;) c[k] = v[pos++];
    s.psi[i] = Poly(std::move(c));
  }
  std::vector<Elem> c(phi_total, 0);
  for (unsigned k = phi_total; k-- > 0;) c[k] = v[pos++];
  s.phi = Poly(std::move(c));
  return s;
}

KeySolution canonical_pick(const Field& F, const std::vector<KeySolution>& basis, unsigned ell, unsigned psi_len,
                           unsigned phi_total) {
  const std::size_t width = static_cast<std::size_t>(ell) * psi_len + phi_total;
  Matrix m(basis.size(), width);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const auto v = canonical_coords(basis[r], psi_len, phi_total);
    for (std::size_t c = 0; c < width; ++c) m.at(r, c) = v[c];
  }
  const auto pivots = rref(F, m);
  const std::size_t last = pivots.size() - 1;
  std::vector<Elem> v(width);
  for (std::size_t c = 0; c < width; ++c) v[c] = m.at(last, c);
  return from_coords(v, ell, psi_len, phi_total);
}

DecodeOutcome finish(const KeySolution& s, const CodeParams& cp, unsigned t) {
  const Field& F = cp.field();
  std::vector<Poly> all(s.psi);
  all.push_back(s.phi);
  const Poly eta = gcd(F, all);
  DecodeOutcome out;
  if (eta.degree() > static_cast<int>(t)) {
    out.reason = FailureReason::GcdDegreeExceedsT;
    return out;
  }
  const Poly phi = div_exact(F, s.phi, eta);
  if (phi.is_zero() || phi.degree() >= static_cast<int>(cp.d_g())) {
    out.reason = FailureReason::DenominatorDegree;
    return out;
  }
  FractionVector fv;
  const Elem c = F.inv(phi.lead());
  fv.g = scale(F, phi, c);
  for (const auto& p : s.psi) {
    Poly q = div_exact(F, p, eta);
    if (q.degree() >= static_cast<int>(cp.d_f())) {
      out.reason = FailureReason::NumeratorDegree;
      return out;
    }
    fv.f.push_back(scale(F, q, c));
  }
  out.fraction = std::move(fv);
  return out;
}

}  // namespace

KeyEqSystem build_key_system(const ReceivedWord& R, const CodeParams& cp, unsigned t) {
  check_word(R, cp);
  check_t(cp, t);
  KeyEqSystem sys = make_system(cp.field());
  sys.ell = cp.ell();
  sys.modulus = cp.points().M();
  sys.weight = Poly::constant(1);
  for (unsigned i = 0; i < cp.ell(); ++i) sys.rhs.push_back(R.row_interpolant(i, cp.points()));
  sys.phi_factor = Poly::constant(1);
  sys.phi_len = cp.d_g() + t;
  sys.psi_len = cp.d_f() + t;
  sys.phi_total = cp.d_g() + t;
  return sys;
}

KeyEqSystem build_pole_key_system(const PoleWord& R, const CodeParams& cp, unsigned t) {
  check_pole_word(R, cp);
  check_t(cp, t);
  const auto& ps = cp.points();
  const Field& F = cp.field();
  KeyEqSystem sys = make_system(F);
  sys.ell = cp.ell();
  sys.modulus = ps.M();
  std::vector<Poly> w;
  for (std::size_t j = 0; j < cp.n(); ++j)
    w.push_back(ps.reduce(pow(F, Poly::x_minus(F, ps.alpha(j)), R.column(j).vr), j));
  sys.weight = ps.interpolate(w);
  for (unsigned i = 0; i < cp.ell(); ++i) sys.rhs.push_back(R.row_interpolant(i, ps));
  sys.phi_factor = Poly::constant(1);
  sys.phi_len = cp.d_g() + t;
  sys.psi_len = cp.d_f() + t;
  sys.phi_total = cp.d_g() + t;
  return sys;
}

KeyEqSystem build_reduced_key_system(const PoleWord& R, const CodeParams& cp, unsigned t) {
  check_pole_word(R, cp);
  check_t(cp, t);
  const auto& ps = cp.points();
  const Field& F = cp.field();
  const Exponents vr = R.valuations();
  Exponents rest(cp.n());
  std::vector<Point> pts;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < cp.n(); ++j) {
    rest[j] = ps.lambda(j) - vr[j];
    if (rest[j] > 0) {
      pts.push_back({ps.alpha(j), rest[j]});
      kept.push_back(j);
    }
  }
  const Poly m_inf = ps.locator(vr);
  KeyEqSystem sys = make_system(F);
  sys.ell = cp.ell();
  sys.modulus = ps.locator(rest);
  sys.weight = Poly::constant(1);
  sys.phi_factor = m_inf;
  const int len = static_cast<int>(cp.d_g() + t) - m_inf.degree();
  sys.phi_len = len > 0 ? static_cast<unsigned>(len) : 0;
  sys.psi_len = cp.d_f() + t;
  sys.phi_total = cp.d_g() + t;
  if (kept.empty()) {
    sys.rhs.assign(cp.ell(), Poly{});
    return sys;
  }
  const PointSystem sub_ps(F, pts);
  for (unsigned i = 0; i < cp.ell(); ++i) {
    std::vector<Poly> res;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::size_t j = kept[k];
      const Poly cof = div_exact(F, m_inf, pow(F, Poly::x_minus(F, ps.alpha(j)), vr[j]));
      res.push_back(sub_ps.reduce(mul(F, cof, R.column(j).r[i]), k));
    }
    sys.rhs.push_back(sub_ps.interpolate(res));
  }
  return sys;
}

std::optional<KeySolution> solve_min_degree(const KeyEqSystem& sys) {
  const Field& F = sys.F;
  const unsigned s = static_cast<unsigned>(std::max(0, sys.phi_factor.degree()));
  const std::size_t dm = static_cast<std::size_t>(std::max(0, sys.modulus.degree()));
  const std::size_t rows = sys.ell * dm;
  const Poly mod = monic(F, sys.modulus);

  // Column images: phi' coefficient k -> (-x^k rhs_i rem m)_i; psi_i coefficient k -> x^k weight rem m.
  std::vector<std::vector<std::vector<Elem>>> phi_img(sys.ell);
  for (unsigned i = 0; i < sys.ell; ++i) phi_img[i] = shifted_remainders(F, sys.rhs[i], mod, sys.phi_len);
  const auto psi_img = shifted_remainders(F, sys.weight, mod, sys.psi_len);

  const unsigned maxD = std::max(sys.phi_len == 0 ? 0 : sys.phi_len - 1 + s, sys.psi_len - 1);
  for (unsigned D = 0; D <= maxD; ++D) {
    struct Col {
      int block;  // -1 for phi', else psi index
      unsigned k;
    };
    std::vector<Col> cols;
    for (unsigned k = 0; k < sys.phi_len && k + s <= D; ++k) cols.push_back({-1, k});
    for (unsigned i = 0; i < sys.ell; ++i)
      for (unsigned k = 0; k < sys.psi_len && k <= D; ++k) cols.push_back({static_cast<int>(i), k});
    if (cols.empty()) continue;
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& col = cols[c];
      if (col.block < 0) {
        for (unsigned i = 0; i < sys.ell; ++i)
          for (std::size_t d = 0; d < dm; ++d) m.at(i * dm + d, c) = F.neg(phi_img[i][col.k][d]);
      } else {
        for (std::size_t d = 0; d < dm; ++d) m.at(col.block * dm + d, c) = psi_img[col.k][d];
      }
    }
    const auto kernel = nullspace(F, std::move(m));
    if (kernel.empty()) continue;
    std::vector<KeySolution> basis;
    for (const auto& v : kernel) {
      std::vector<Elem> phic(sys.phi_len, 0);
      std::vector<std::vector<Elem>> psic(sys.ell, std::vector<Elem>(sys.psi_len, 0));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].block < 0)
          phic[cols[c].k] = v[c];
        else
          psic[cols[c].block][cols[c].k] = v[c];
      }
      KeySolution sol;
      sol.phi = mul(F, sys.phi_factor, Poly(std::move(phic)));
      for (auto& p : psic) sol.psi.emplace_back(std::move(p));
      basis.push_back(std::move(sol));
    }
    return canonical_pick(F, basis, sys.ell, sys.psi_len, sys.phi_total);
  }
  return std::nullopt;
}

std::optional<KeySolution> solve_min_degree_implicit(const ReceivedWord& R, const CodeParams& cp, unsigned t) {
  check_word(R, cp);
  check_t(cp, t);
  const Field& F = cp.field();
  const std::size_t L = cp.L();
  const unsigned phi_len = cp.d_g() + t;
  const unsigned psi_len = cp.d_f() + t;
  std::vector<std::vector<std::vector<Elem>>> img(cp.ell());
  for (unsigned i = 0; i < cp.ell(); ++i)
    img[i] = shifted_remainders(F, R.row_interpolant(i, cp.points()), cp.points().M(), phi_len);

  const unsigned maxD = std::max(phi_len, psi_len) - 1;
  for (unsigned D = 0; D <= maxD; ++D) {
    const unsigned nphi = std::min(D + 1, phi_len);
    const std::size_t top = std::min(D + 1, psi_len);  // psi degrees allowed: < top
    const std::size_t per = L - top;
    Matrix m(cp.ell() * per, nphi);
    for (unsigned k = 0; k < nphi; ++k)
      for (unsigned i = 0; i < cp.ell(); ++i)
        for (std::size_t d = top; d < L; ++d) m.at(i * per + (d - top), k) = img[i][k][d];
    const auto kernel = nullspace(F, std::move(m));
    if (kernel.empty()) continue;
    std::vector<KeySolution> basis;
    for (const auto& v : kernel) {
      KeySolution sol;
      sol.phi = Poly(std::vector<Elem>(v.begin(), v.end()));
      for (unsigned i = 0; i < cp.ell(); ++i) {
        std::vector<Elem> c(top, 0);
        for (unsigned k = 0; k < nphi; ++k)
          if (v[k] != 0)
            for (std::size_t d = 0; d < top; ++d) c[d] = F.add(c[d], F.mul(v[k], img[i][k][d]));
        sol.psi.emplace_back(std::move(c));
      }
      basis.push_back(std::move(sol));
    }
    return canonical_pick(F, basis, cp.ell(), psi_len, phi_len);
  }
  return std::nullopt;
}

bool satisfies(const KeyEqSystem& sys, const KeySolution& s) {
  const Field& F = sys.F;
  if (s.psi.size() != sys.ell) return false;
  if (s.phi.degree() >= static_cast<int>(sys.phi_total)) return false;
  if (!rem(F, s.phi, sys.phi_factor).is_zero()) return false;
  const Poly phi_red = div_exact(F, s.phi, sys.phi_factor);
  if (phi_red.degree() >= static_cast<int>(sys.phi_len)) return false;
  for (unsigned i = 0; i < sys.ell; ++i) {
    if (s.psi[i].degree() >= static_cast<int>(sys.psi_len)) return false;
    const Poly lhs = mul(F, sys.weight, s.psi[i]);
    const Poly r = mul(F, phi_red, sys.rhs[i]);
    if (sys.modulus.degree() > 0 && !rem(F, sub(F, lhs, r), sys.modulus).is_zero()) return false;
  }
  return true;
}

DecodeOutcome decode(const ReceivedWord& R, const CodeParams& cp, unsigned t, KeySolver solver) {
  const auto sol = solver == KeySolver::Implicit ? solve_min_degree_implicit(R, cp, t)
                                                 : solve_min_degree(build_key_system(R, cp, t));
  if (!sol) return {std::nullopt, FailureReason::NoNonzeroSolution};
  DecodeOutcome out = finish(*sol, cp, t);
  if (!out.success()) return out;
  const auto& ps = cp.points();
  for (std::size_t j = 0; j < cp.n(); ++j)
    if (eval(cp.field(), out.fraction->g, ps.alpha(j)) == 0) return {std::nullopt, FailureReason::ReencodeMismatch};
  if (distance(encode(*out.fraction, cp), R, cp) > t) return {std::nullopt, FailureReason::ReencodeMismatch};
  return out;
}

DecodeOutcome decode_poles(const PoleWord& R, const CodeParams& cp, unsigned t, PoleKeySystem system) {
  check_pole_word(R, cp);
  if (!is_reduced(R, cp)) throw DecodeError("received pole word must be reduced");
  const auto sys = system == PoleKeySystem::Reduced ? build_reduced_key_system(R, cp, t)
                                                    : build_pole_key_system(R, cp, t);
  const auto sol = solve_min_degree(sys);
  if (!sol) return {std::nullopt, FailureReason::NoNonzeroSolution};
  DecodeOutcome out = finish(*sol, cp, t);
  if (!out.success()) return out;
  if (pole_distance(encode_multiprecision(*out.fraction, cp), R, cp) > t)
    return {std::nullopt, FailureReason::ReencodeMismatch};
  return out;
}

}  // namespace srf
