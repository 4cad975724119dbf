#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "srf/error_models.hpp"

using namespace srf;

namespace {

Poly P(std::vector<Elem> c) { return Poly(std::move(c)); }

CodeParams make(std::uint64_t p, std::vector<Point> pts, unsigned df, unsigned dg, unsigned ell) {
  return CodeParams(PointSystem(Field(p), std::move(pts)), df, dg, ell);
}

std::vector<Poly> column_diff(const CodeParams& cp, const ReceivedWord& a, const ReceivedWord& b, std::size_t j) {
  std::vector<Poly> d;
  for (std::size_t i = 0; i < cp.ell(); ++i) d.push_back(sub(cp.field(), a.at(i, j), b.at(i, j)));
  return d;
}

// Key for a column: all Taylor coefficients at alpha, flattened.
std::vector<Elem> taylor_key(const CodeParams& cp, std::size_t j, const std::vector<Poly>& col) {
  std::vector<Elem> key;
  const std::uint64_t p = cp.field().prime();
  for (const auto& c : col) {
    const auto t = oracle::taylor(c.coeffs(), cp.points().alpha(j), cp.points().lambda(j), p);
    key.insert(key.end(), t.begin(), t.end());
  }
  return key;
}

void check_uniform(const std::map<std::vector<Elem>, int>& counts, std::size_t outcomes, int draws) {
  CHECK(counts.size() == outcomes);
  const double expect = static_cast<double>(draws) / static_cast<double>(outcomes);
  double chi2 = 0;
  for (const auto& [k, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
  // Wilson-Hilferty approximation to the 0.9999 quantile of chi-square.
  const double dof = static_cast<double>(outcomes - 1);
  const double z = 3.719;
  const double crit = dof * std::pow(1 - 2 / (9 * dof) + z * std::sqrt(2 / (9 * dof)), 3);
  CHECK(chi2 < crit);
}

}  // namespace

TEST_CASE("model names") {
  CHECK(parse_model_kind("H2") == ModelKind::H2);
  CHECK(to_string(ModelKind::B1) == "B1");
  CHECK_THROWS_AS(parse_model_kind("E3"), ModelError);
  CHECK(is_exact_model(ModelKind::B1));
  CHECK_FALSE(is_exact_model(ModelKind::E2));
  CHECK(is_pole_model(ModelKind::B2));
}

TEST_CASE("E1 with trivial locator returns the codeword") {
  const auto cp = make(7, {{0, 2}, {1, 1}, {2, 1}}, 1, 1, 2);
  const FractionVector fv{{P({1, 0}), P({3})}, P({1})};
  const auto C = encode(fv, cp);
  Rng rng(1);
  const auto spec = ErrorSpec::e1(cp, {0, 0, 0});
  CHECK(sample_E1(spec, C, cp, rng) == C);
  CHECK_THROWS_AS(sample_E2(spec, C, cp, rng), ModelError);
}

TEST_CASE("E1 realizes its locator exactly and E2 divides it") {
  const auto cp = make(11, {{0, 3}, {1, 2}, {2, 1}, {3, 1}}, 2, 2, 2);
  const FractionVector fv{{P({1, 2}), P({5})}, P({1, 1})};
  const auto C = encode(fv, cp);
  Rng rng(2);
  const Exponents lam{2, 2, 0, 1};
  const auto e1 = ErrorSpec::e1(cp, lam);
  const auto e2 = ErrorSpec::e2(cp, lam);
  for (int k = 0; k < 500; ++k) {
    CHECK(error_locator(C, sample(e1, C, cp, rng), cp) == lam);
    CHECK(divides(error_locator(C, sample(e2, C, cp, rng), cp), lam));
  }
  CHECK_THROWS_AS(ErrorSpec::e1(cp, {4, 0, 0, 0}), ModelError);
  CHECK_THROWS_AS(ErrorSpec::e1(cp, {1, 0, 0}), ModelError);
}

TEST_CASE("E1 error columns are uniform over their admissible set") {
  // p = 5, ell = 2, one point of multiplicity 2, Lambda = x: valuation exactly 1
  // leaves 5^2 - 1 = 24 possible columns.
  const auto cp = make(5, {{0, 2}}, 1, 1, 2);
  const FractionVector fv{{P({2}), P({3})}, P({1})};
  const auto C = encode(fv, cp);
  const auto spec = ErrorSpec::e1(cp, {1});
  Rng rng(3);
  std::map<std::vector<Elem>, int> counts;
  const int N = 100000;
  for (int k = 0; k < N; ++k) {
    const auto d = column_diff(cp, sample(spec, C, cp, rng), C, 0);
    const auto key = taylor_key(cp, 0, d);
    CHECK(key[0] == 0);  // constant Taylor coefficient of row 1
    CHECK(key[2] == 0);  // and of row 2
    ++counts[key];
  }
  check_uniform(counts, 24, N);
}

TEST_CASE("E2 realized locator frequencies") {
  // Two simple points, ell = 1, Lambda_m = (1,1) over F_5. Each point is hit
  // with probability 4/5 independently.
  const auto cp = make(5, {{0, 1}, {1, 1}}, 1, 1, 1);
  const FractionVector fv{{P({1})}, P({1})};
  const auto C = encode(fv, cp);
  const auto spec = ErrorSpec::e2(cp, {1, 1});
  Rng rng(4);
  std::map<Exponents, int> counts;
  const int N = 100000;
  for (int k = 0; k < N; ++k) ++counts[error_locator(C, sample(spec, C, cp, rng), cp)];
  const std::map<Exponents, double> prob{{{0, 0}, 0.04}, {{1, 0}, 0.16}, {{0, 1}, 0.16}, {{1, 1}, 0.64}};
  for (const auto& [e, pr] : prob) {
    const double sigma = std::sqrt(N * pr * (1 - pr));
    CHECK(std::abs(counts[e] - N * pr) < 5 * sigma);
  }
}

TEST_CASE("hybrid models keep fixed columns verbatim") {
  const auto cp = make(7, {{0, 2}, {1, 2}, {2, 1}, {3, 1}}, 1, 1, 2);
  const FractionVector fv{{P({1}), P({2})}, P({1})};
  const auto C = encode(fv, cp);
  Rng rng(5);
  const Exponents lu{1, 0, 1, 0};
  const auto eps = draw_epsilon(cp, lu, rng);
  CHECK(column_valuation(cp.points(), 0, eps[0]) == 1);
  CHECK(column_valuation(cp.points(), 2, eps[2]) == 0);

  const auto degenerate = ErrorSpec::h1(cp, {0, 0, 0, 0}, lu, eps);
  const auto R0 = sample_H1(degenerate, C, cp, rng);
  CHECK(R0 == sample_H1(degenerate, C, cp, rng));
  CHECK(error_locator(C, R0, cp) == lu);

  const auto spec = ErrorSpec::h1(cp, {0, 2, 0, 1}, lu, eps);
  CHECK(spec.locator() == Exponents{1, 2, 1, 1});
  const auto spec2 = ErrorSpec::h2(cp, {0, 2, 0, 1}, lu, eps);
  for (int k = 0; k < 300; ++k) {
    const auto R = sample(spec, C, cp, rng);
    CHECK(column_diff(cp, R, C, 0) == eps[0]);
    CHECK(column_diff(cp, R, C, 2) == eps[2]);
    CHECK(error_locator(C, R, cp) == spec.locator());
    const auto R2 = sample_H2(spec2, C, cp, rng);
    CHECK(column_diff(cp, R2, C, 0) == eps[0]);
    CHECK(divides(error_locator(C, R2, cp), spec.locator()));
  }
}

TEST_CASE("hybrid random columns are uniform") {
  const auto cp = make(5, {{0, 1}, {1, 2}}, 1, 1, 2);
  const FractionVector fv{{P({1}), P({0})}, P({1})};
  const auto C = encode(fv, cp);
  Rng rng(6);
  const auto eps = draw_epsilon(cp, {1, 0}, rng);
  const auto spec = ErrorSpec::h1(cp, {0, 1}, {1, 0}, eps);
  std::map<std::vector<Elem>, int> counts;
  const int N = 100000;
  for (int k = 0; k < N; ++k) ++counts[taylor_key(cp, 1, column_diff(cp, sample(spec, C, cp, rng), C, 1))];
  check_uniform(counts, 24, N);
}

TEST_CASE("hybrid spec validation") {
  const auto cp = make(7, {{0, 2}, {1, 2}}, 1, 1, 1);
  Rng rng(7);
  const auto eps = draw_epsilon(cp, {2, 0}, rng);
  CHECK_THROWS_AS(ErrorSpec::h1(cp, {1, 0}, {2, 0}, eps), ModelError);  // overlapping parts
  CHECK_THROWS_AS(ErrorSpec::h1(cp, {0, 1}, {1, 0}, eps), ModelError);  // wrong valuation
  CHECK_THROWS_AS(ErrorSpec::h1(cp, {0, 1}, {2, 0}, {}), ModelError);   // missing column
  std::vector<std::vector<Poly>> unreduced(2);
  unreduced[0] = {P({1, 0, 1})};
  CHECK_THROWS_AS(ErrorSpec::h1(cp, {0, 1}, {2, 0}, unreduced), ModelError);
  CHECK_NOTHROW(ErrorSpec::h2(cp, {0, 1}, {2, 0}, eps));
}

TEST_CASE("adversarial fixed columns") {
  const auto cp = make(11, {{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}, 2, 2, 1);
  const FractionVector fv{{P({1, 1})}, P({2, 1})};
  const Exponents lu{2, 1, 0, 0, 0};
  const auto eps = adversarial_epsilon(cp, lu, fv, 2);
  CHECK_NOTHROW(ErrorSpec::h1(cp, {0, 0, 0, 0, 1}, lu, eps));
  // Where the two codewords differ with exactly the prescribed valuation,
  // epsilon is their column difference.
  const auto C = encode(fv, cp);
  FractionVector other = fv;
  other.f[0] = scale(cp.field(), other.f[0], 2);
  const auto C2 = encode(normalize(cp.field(), other), cp);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto d = column_diff(cp, C2, C, j);
    const unsigned v = column_valuation(cp.points(), j, d);
    CHECK(column_valuation(cp.points(), j, eps[j]) == cp.points().lambda(j) - lu[j]);
    if (v < cp.points().lambda(j) && v == cp.points().lambda(j) - lu[j]) CHECK(eps[j] == d);
  }
}

TEST_CASE("pole models") {
  // g = x (x - 1) has simple poles at the first two points.
  const auto cp = make(7, {{0, 2}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}, 2, 3, 2);
  const FractionVector fv{{P({1, 1}), P({3})}, P({0, 6, 1})};
  const auto C = encode_multiprecision(fv, cp);
  REQUIRE(C.column(0).vr == 1);
  REQUIRE(C.column(1).vr == 1);
  Rng rng(8);

  const auto trivial = ErrorSpec::b1(cp, fv, Exponents(5, 0), Exponents(5, 0), {});
  CHECK(sample_B1(trivial, cp, rng) == C);
  CHECK_THROWS_AS(sample(trivial, encode(FractionVector{{P({1}), P({1})}, P({1})}, cp), cp, rng), ModelError);

  // Valuation errors at both poles: below nu(g) at point 1 (mu = 0) and at
  // nu(g) with a larger claim at point 2 (mu = 1 = lambda, vr > 1 impossible,
  // so use mu = 0 there too); evaluation errors elsewhere.
  const Exponents lv{2, 1, 0, 0, 0};
  const Exponents le{0, 0, 2, 0, 1};
  const auto frozen = draw_frozen(cp, fv, lv, rng);
  CHECK(frozen[0].vr == 0);
  CHECK(frozen[1].vr == 0);
  const auto b1 = ErrorSpec::b1(cp, fv, le, lv, frozen);
  const auto b2 = ErrorSpec::b2(cp, fv, le, lv, frozen);
  const ErrorSupportPartition expect{{0, 1}, {2, 4}};
  for (int k = 0; k < 1000; ++k) {
    const auto R = sample_pole(b1, cp, rng);
    CHECK(is_reduced(R, cp));
    CHECK(R.column(0) == b1.frozen()[0]);
    CHECK(R.column(1) == b1.frozen()[1]);
    CHECK(R.column(3) == C.column(3));
    CHECK(pole_error_matrix(R, C, cp).locator == b1.locator());
    CHECK(partition_error_support(R, C, cp) == expect);
    const auto R2 = sample_B2(b2, cp, rng);
    CHECK(divides(pole_error_matrix(R2, C, cp).locator, b2.locator()));
  }

  // Evaluation errors need mu > nu(g) at a pole, valuation errors mu <= nu(g).
  CHECK_THROWS_AS(ErrorSpec::b1(cp, fv, {1, 0, 0, 0, 0}, Exponents(5, 0), {}), ModelError);
  CHECK_THROWS_AS(ErrorSpec::b1(cp, fv, Exponents(5, 0), {0, 0, 1, 0, 0}, frozen), ModelError);
  auto bad = frozen;
  bad[0].vr = 1;
  CHECK_THROWS_AS(ErrorSpec::b1(cp, fv, Exponents(5, 0), lv, bad), ModelError);
}

TEST_CASE("frozen columns above the pole order") {
  // Double point with a simple pole: mu = nu(g) = 1 forces vr = 2.
  const auto cp = make(5, {{0, 2}, {1, 1}, {2, 1}, {3, 1}}, 1, 2, 1);
  const FractionVector fv{{P({1})}, P({0, 1})};
  Rng rng(9);
  const auto frozen = draw_frozen(cp, fv, {1, 0, 0, 0}, rng);
  CHECK(frozen[0].vr == 2);
  CHECK(frozen[0].r == std::vector<Poly>{P({1})});
  const auto spec = ErrorSpec::b1(cp, fv, {0, 0, 0, 1}, {1, 0, 0, 0}, frozen);
  const auto C = encode_multiprecision(fv, cp);
  for (int k = 0; k < 100; ++k) {
    const auto R = sample_pole(spec, cp, rng);
    CHECK(pole_error_matrix(R, C, cp).locator == spec.locator());
  }
}

TEST_CASE("omega counts") {
  CHECK(omega_count(5, {0, 0}, {0, 0}, 2) == 1);
  CHECK(omega_count(5, {2}, {0}, 1) == 20);
  CHECK(omega_count(5, {1, 1}, {0, 0}, 2) == 576);
  CHECK(omega_count(5, {3, 1}, {3, 1}, 4) == 1);
  CHECK_THROWS_AS(omega_count(5, {1}, {2}, 1), ModelError);

  // Enumerate ell-vectors of residues mod Lambda/eta over F_3 coprime to it.
  const std::uint64_t q = 3;
  const std::vector<std::uint64_t> alphas{0, 1};
  const Exponents lam{2, 1}, eta{1, 0};
  const unsigned ell = 2;
  std::vector<std::uint64_t> mod{1};
  for (std::size_t j = 0; j < alphas.size(); ++j)
    for (unsigned k = eta[j]; k < lam[j]; ++k) {
      std::vector<std::uint64_t> next(mod.size() + 1, 0);
      for (std::size_t d = 0; d < mod.size(); ++d) {
        next[d + 1] = (next[d + 1] + mod[d]) % q;
        next[d] = (next[d] + (q - alphas[j]) % q * mod[d]) % q;
      }
      mod = next;
    }
  const std::size_t deg = mod.size() - 1;
  std::size_t total = 1;
  for (std::size_t k = 0; k < deg * ell; ++k) total *= q;
  std::size_t good = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> digits(deg * ell);
    std::size_t c = code;
    for (auto& d : digits) {
      d = c % q;
      c /= q;
    }
    bool ok = true;
    for (std::size_t j = 0; j < alphas.size() && ok; ++j) {
      if (lam[j] == eta[j]) continue;
      bool any = false;
      for (unsigned i = 0; i < ell; ++i) {
        std::uint64_t v = 0, pw = 1;
        for (std::size_t d = 0; d < deg; ++d) {
          v = (v + digits[i * deg + d] * pw) % q;
          pw = pw * alphas[j] % q;
        }
        any = any || v != 0;
      }
      ok = any;
    }
    good += ok;
  }
  CHECK(omega_count(q, lam, eta, ell) == good);
}
