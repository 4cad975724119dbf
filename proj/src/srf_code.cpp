#include "srf/srf_code.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "codebook.hpp"

namespace srf {

CodeParams::CodeParams(PointSystem ps, unsigned d_f, unsigned d_g, unsigned ell)
    : ps_(std::move(ps)), d_f_(d_f), d_g_(d_g), ell_(ell) {
  if (d_f == 0 || d_g == 0) throw CodeError("degree bounds d_f and d_g must be positive");
  if (ell == 0) throw CodeError("interleaving parameter must be positive");
  if (d_f + d_g > ps_.L() + 1)
    throw CodeError("degree bounds violate d_f + d_g <= L + 1 (L = " + std::to_string(ps_.L()) + ")");
}

bool is_reduced(const Field& F, const FractionVector& fv) {
  if (fv.g.is_zero()) return false;
  std::vector<Poly> all(fv.f);
  all.push_back(fv.g);
  return gcd(F, all).degree() == 0;
}

FractionVector normalize(const Field& F, const FractionVector& fv) {
  if (fv.g.is_zero()) throw CodeError("denominator is zero");
  std::vector<Poly> all(fv.f);
  all.push_back(fv.g);
  const Poly d = gcd(F, all);
  const Elem c = F.inv(div_exact(F, fv.g, d).lead());
  FractionVector out;
  out.g = scale(F, div_exact(F, fv.g, d), c);
  for (const auto& f : fv.f) out.f.push_back(scale(F, div_exact(F, f, d), c));
  return out;
}

void check_fraction(const FractionVector& fv, const CodeParams& cp) {
  if (fv.f.size() != cp.ell())
    throw CodeError("fraction vector has " + std::to_string(fv.f.size()) + " numerators, expected " +
                    std::to_string(cp.ell()));
  if (fv.g.is_zero()) throw CodeError("denominator is zero");
  if (fv.g.degree() >= static_cast<int>(cp.d_g())) throw CodeError("deg g >= d_g");
  for (const auto& f : fv.f)
    if (f.degree() >= static_cast<int>(cp.d_f())) throw CodeError("deg f_i >= d_f");
  if (!is_reduced(cp.field(), fv)) throw CodeError("fraction vector is not reduced");
}

bool same_fraction(const Field& F, const FractionVector& a, const FractionVector& b) {
  if (a.f.size() != b.f.size()) return false;
  for (std::size_t i = 0; i < a.f.size(); ++i)
    if (mul(F, a.f[i], b.g) != mul(F, b.f[i], a.g)) return false;
  return true;
}

Poly ReceivedWord::row_interpolant(std::size_t i, const PointSystem& ps) const {
  std::vector<Poly> res;
  res.reserve(n());
  for (const auto& col : cols_) res.push_back(col[i]);
  return ps.interpolate(res);
}

void check_word(const ReceivedWord& w, const CodeParams& cp) {
  if (w.ell() != cp.ell() || w.n() != cp.n())
    throw CodeError("received word shape " + std::to_string(w.ell()) + "x" + std::to_string(w.n()) +
                    " does not match code " + std::to_string(cp.ell()) + "x" + std::to_string(cp.n()));
  for (std::size_t j = 0; j < w.n(); ++j)
    for (std::size_t i = 0; i < w.ell(); ++i)
      if (w.at(i, j).degree() >= static_cast<int>(cp.points().lambda(j)))
        throw CodeError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") is not reduced modulo its local modulus");
}

std::string to_string(const ReceivedWord& w) {
  std::ostringstream os;
  for (std::size_t j = 0; j < w.n(); ++j) {
    for (std::size_t i = 0; i < w.ell(); ++i) {
      if (i) os << " ; ";
      os << to_string(w.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t\r")] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

ReceivedWord parse_received_word(const std::string& text, const CodeParams& cp) {
  const auto lines = content_lines(text);
  if (lines.size() != cp.n())
    throw CodeError("received word has " + std::to_string(lines.size()) + " lines, expected " +
                    std::to_string(cp.n()));
  ReceivedWord w(cp.ell(), cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    const auto fields = split_fields(lines[j], ';');
    if (fields.size() != cp.ell())
      throw CodeError("line " + std::to_string(j + 1) + " has " + std::to_string(fields.size()) +
                      " entries, expected " + std::to_string(cp.ell()));
    for (std::size_t i = 0; i < cp.ell(); ++i) w.at(i, j) = cp.points().reduce(parse_poly(cp.field(), fields[i]), j);
  }
  return w;
}

ReceivedWord encode(const FractionVector& fv, const CodeParams& cp) {
  check_fraction(fv, cp);
  const auto& ps = cp.points();
  const Field& F = cp.field();
  ReceivedWord w(cp.ell(), cp.n());
  for (std::size_t j = 0; j < cp.n(); ++j) {
    if (eval(F, fv.g, ps.alpha(j)) == 0)
      throw CodeError("denominator vanishes at point " + std::to_string(j + 1) + "; use the pole encoder");
    const Poly ginv = inv_mod(F, ps.reduce(fv.g, j), ps.modulus(j));
    for (std::size_t i = 0; i < cp.ell(); ++i) w.at(i, j) = ps.reduce(mul(F, fv.f[i], ginv), j);
  }
  return w;
}

unsigned column_valuation(const PointSystem& ps, std::size_t j, const std::vector<Poly>& col) {
  unsigned v = ps.lambda(j);
  for (const auto& r : col) v = std::min(v, ps.truncated_valuation(r, j));
  return v;
}

Exponents error_locator(const ReceivedWord& a, const ReceivedWord& b, const CodeParams& cp) {
  check_word(a, cp);
  check_word(b, cp);
  const auto& ps = cp.points();
  Exponents e(cp.n(), 0);
  for (std::size_t j = 0; j < cp.n(); ++j) {
    std::vector<Poly> diff;
    for (std::size_t i = 0; i < cp.ell(); ++i) diff.push_back(sub(cp.field(), a.at(i, j), b.at(i, j)));
    e[j] = ps.lambda(j) - column_valuation(ps, j, diff);
  }
  return e;
}

unsigned distance(const ReceivedWord& a, const ReceivedWord& b, const CodeParams& cp) {
  return total_degree(error_locator(a, b, cp));
}

std::vector<FractionVector> enumerate_fractions(const CodeParams& cp, bool with_poles) {
  const Field& F = cp.field();
  const double p = static_cast<double>(F.prime());
  const double candidates = std::pow(p, static_cast<double>(cp.ell() * cp.d_f() + cp.d_g()));
  if (candidates > kBruteForceCandidateLimit)
    throw CodeError("instance too large for exhaustive enumeration (p^(l*d_f+d_g) > 1e7)");

  const std::size_t nf = cp.ell() * cp.d_f();
  std::vector<FractionVector> out;
  std::vector<Elem> fdig(nf, 0);
  for (unsigned dg = 0; dg < cp.d_g(); ++dg) {
    std::vector<Elem> gdig(dg, 0);
    while (true) {
      std::vector<Elem> gc(gdig);
      gc.push_back(1);
      Poly g(gc);
      bool ok = true;
      if (!with_poles)
        for (std::size_t j = 0; j < cp.n() && ok; ++j) ok = eval(F, g, cp.points().alpha(j)) != 0;
      if (ok) {
        std::fill(fdig.begin(), fdig.end(), 0);
        while (true) {
          FractionVector fv;
          fv.g = g;
          for (unsigned i = 0; i < cp.ell(); ++i)
            fv.f.emplace_back(std::vector<Elem>(fdig.begin() + i * cp.d_f(), fdig.begin() + (i + 1) * cp.d_f()));
          if (is_reduced(F, fv)) out.push_back(std::move(fv));
          std::size_t k = 0;
          while (k < nf && ++fdig[k] == F.prime()) fdig[k++] = 0;
          if (k == nf) break;
        }
      }
      std::size_t k = 0;
      while (k < dg && ++gdig[k] == F.prime()) gdig[k++] = 0;
      if (k == dg) break;
    }
  }
  return out;
}

namespace detail {

Codebook::Codebook(const CodeParams& cp) : cp_(cp) {
  offsets_.push_back(0);
  for (std::size_t j = 0; j < cp.n(); ++j) offsets_.push_back(offsets_.back() + cp.points().lambda(j) * cp.ell());
}

void Codebook::add(std::vector<Elem> flat, std::vector<unsigned> vr) {
  words_.push_back(std::move(flat));
  vrs_.push_back(std::move(vr));
}

unsigned Codebook::pair_distance(std::size_t a, std::size_t b) const {
  const auto& A = words_[a];
  const auto& B = words_[b];
  const std::size_t ell = cp_.ell();
  unsigned d = 0;
  for (std::size_t j = 0; j < cp_.n(); ++j) {
    const unsigned lam = cp_.points().lambda(j);
    const std::size_t base = offsets_[j];
    const unsigned va = vrs_.empty() || vrs_[a].empty() ? 0 : vrs_[a][j];
    const unsigned vb = vrs_.empty() || vrs_[b].empty() ? 0 : vrs_[b][j];
    // Taylor coefficient k of (x-a)^va * r_b - (x-a)^vb * r_a.
    unsigned mu = lam;
    for (unsigned k = 0; k < lam && mu == lam; ++k) {
      for (std::size_t i = 0; i < ell; ++i) {
        const Elem x = k >= va ? B[base + (k - va) * ell + i] : 0;
        const Elem y = k >= vb ? A[base + (k - vb) * ell + i] : 0;
        if (x != y) {
          mu = k;
          break;
        }
      }
    }
    d += lam - mu;
  }
  return d;
}

MinDistanceResult Codebook::minimum(const std::vector<FractionVector>& fractions) const {
  const std::size_t N = words_.size();
  if (N < 2) throw CodeError("fewer than two codewords");
  if (static_cast<double>(N) * static_cast<double>(N - 1) / 2 > kBruteForcePairLimit)
    throw CodeError("instance too large for pairwise enumeration");
  MinDistanceResult r;
  r.codewords = N;
  r.min_distance = std::numeric_limits<unsigned>::max();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      const unsigned d = pair_distance(a, b);
      if (d == 0) {
        ++r.collisions;
        continue;
      }
      if (d < r.min_distance) {
        r.min_distance = d;
        r.first = fractions[a];
        r.second = fractions[b];
      }
    }
  if (r.min_distance == std::numeric_limits<unsigned>::max()) throw CodeError("fewer than two codewords");
  return r;
}

std::vector<Elem> flatten_column_taylor(const Field& F, const PointSystem& ps, std::size_t j,
                                        const std::vector<Poly>& col) {
  const unsigned lam = ps.lambda(j);
  std::vector<Elem> out(lam * col.size(), 0);
  for (std::size_t i = 0; i < col.size(); ++i) {
    const auto t = taylor(F, col[i], ps.alpha(j), lam);
    for (unsigned k = 0; k < lam; ++k) out[k * col.size() + i] = t[k];
  }
  return out;
}

}  // namespace detail

MinDistanceResult min_distance_bruteforce(const CodeParams& cp) {
  const auto fractions = enumerate_fractions(cp, false);
  detail::Codebook book(cp);
  for (const auto& fv : fractions) {
    const ReceivedWord w = encode(fv, cp);
    std::vector<Elem> flat;
    for (std::size_t j = 0; j < cp.n(); ++j) {
      auto c = detail::flatten_column_taylor(cp.field(), cp.points(), j, w.column(j));
      flat.insert(flat.end(), c.begin(), c.end());
    }
    book.add(std::move(flat), {});
  }
  return book.minimum(fractions);
}

}  // namespace srf
