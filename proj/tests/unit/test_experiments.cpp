#include "doctest.h"
#include "srf/experiments.hpp"

using namespace srf;

namespace {

// Exact P[Binomial(n, p) <= k] for small n.
Rational binomial_cdf(unsigned n, const Rational& p, unsigned k) {
  Rational sum = 0;
  BigInt c = 1;
  for (unsigned i = 0; i <= k && i <= n; ++i) {
    if (i > 0) c = c * (n - i + 1) / i;
    Rational term = Rational(c);
    for (unsigned a = 0; a < i; ++a) term *= p;
    for (unsigned a = 0; a < n - i; ++a) term *= (1 - p);
    sum += term;
  }
  return sum;
}

const char* kE1 = R"(
# unique-radius campaign
campaign_id = e1-small
p = 101
lambdas = 2 2 1 1 1 1
d_f = 2
d_g = 2
l = 2
model = E1
locator = 1:1, 3:1
t = 2
trials = 300
seed = 9
)";

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(kE1);
  CHECK(cfg.campaign_id == "e1-small");
  CHECK(cfg.p == 101);
  CHECK(cfg.alphas == std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(cfg.lambdas == Exponents{2, 2, 1, 1, 1, 1});
  CHECK(cfg.locator == Exponents{1, 0, 1, 0, 0, 0});
  CHECK(cfg.fixed_locator == Exponents(6, 0));
  CHECK(cfg.model == ModelKind::E1);
  CHECK(cfg.ell == 2);
  CHECK(cfg.trials == 300);
  CHECK_FALSE(cfg.t_fixed.has_value());

  const auto h = parse_config(
      "p = 7\nlambdas = 2 1 1\nalphas = 1 3 6\nd_f = 1\nd_g = 1\nmodel = H1\nfixed_locator = 1:1\n"
      "epsilon = explicit\nepsilon.1 = 0 1\nf = 3 ; 1\ng = 1 1\nl = 2\nsolver = explicit\n");
  CHECK(h.alphas == std::vector<Elem>{1, 3, 6});
  CHECK(h.epsilon == EpsilonMode::Explicit);
  REQUIRE(h.explicit_epsilon.count(0));
  CHECK(h.explicit_epsilon.at(0) == std::vector<Poly>{Poly({0, 1})});
  CHECK(h.f->size() == 2);
  CHECK(h.solver == KeySolver::Explicit);

  const auto b = parse_config("p = 5\nlambdas = 2 1\nmodel = B1\nfrozen.2 = 0 ; 3\npole_system = unreduced\n");
  CHECK(b.explicit_frozen.at(1) == PoleColumn{0, {Poly({3})}});
  CHECK(b.pole_system == PoleKeySystem::Unreduced);

  CHECK_THROWS_WITH_AS(parse_config("p = 5\nlambdas = 1\ncolour = red\n"), doctest::Contains("unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("lambdas = 1\n"), doctest::Contains("missing key 'p'"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1 1\nalphas = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1\nf = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1\nlocator = 2:1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1\nepsilon.0 = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1\nt = x\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1 2x\n"), ConfigError);
  CHECK(parse_config("p = 5\nlambdas = 1, 2 3\n").lambdas == Exponents{1, 2, 3});
  CHECK_THROWS_AS(parse_config("p = 5\nlambdas = 1\njust words\n"), ConfigError);
}

TEST_CASE("campaign replay is deterministic across thread counts") {
  const auto c = prepare_campaign(parse_config(kE1));
  const auto a = run_campaign(c, 1);
  const auto b = run_campaign(c, 4);
  CHECK(csv_rows(c, a) == csv_rows(c, b));
  CHECK(run_trial(c, 17).seed == Rng::trial_seed(9, 17));
  CHECK(run_trial(c, 17).realized == a.records[17].realized);
  CHECK(a.failures == 0);
  CHECK(a.model_mismatches == 0);
  CHECK(a.gate.pass);
  const auto rows = csv_rows(c, a);
  CHECK(rows.rfind("e1-small,0,", 0) == 0);
  CHECK(rows.find(",E1,1:1 3:1,success,none,2,0+2,") != std::string::npos);
  CHECK(csv_header().rfind("campaign_id,trial,seed,", 0) == 0);
  CHECK(summary(c, a).find("PASS") != std::string::npos);

  // A different master seed gives different trial seeds and columns.
  auto cfg = parse_config(kE1);
  cfg.seed = 10;
  const auto c2 = prepare_campaign(cfg);
  CHECK(csv_rows(c2, run_campaign(c2, 2)) != csv_rows(c, a));
}

TEST_CASE("hypothesis violations are named") {
  auto base = parse_config(kE1);
  auto cfg = base;
  cfg.t = 7;  // above t_max = 10/3
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("t <= t_max"));
  cfg = base;
  cfg.locator = {2, 2, 0, 0, 0, 0};
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("deg(locator) <= t"));
  cfg = base;
  cfg.fixed_locator = {0, 0, 0, 0, 0, 1};
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("no fixed_locator"));
  cfg = base;
  cfg.model = ModelKind::H1;
  cfg.fixed_locator = {0, 0, 0, 1, 1, 1};
  cfg.locator = Exponents(6, 0);
  cfg.t = 2;
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("t_fixed <= t"));
  cfg.t_fixed = 2;
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("deg(fixed locator) <= t_fixed"));
  cfg.t_fixed.reset();
  cfg.t = 3;
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("negative radius"));
  cfg = base;
  cfg.g = Poly({0, 1});
  cfg.f = std::vector<Poly>{Poly({1}), Poly({2})};
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("coprime"));
  cfg = base;
  cfg.model = ModelKind::B1;
  cfg.epsilon = EpsilonMode::Adversarial;
  CHECK_THROWS_WITH(prepare_campaign(cfg), doctest::Contains("only defined for hybrid"));
}

TEST_CASE("binomial gate rules") {
  auto g = binomial_gate(0, 1000, Rational(1, 1000000000));
  CHECK(g.allowed == 0);
  CHECK(g.pass);
  CHECK_FALSE(binomial_gate(1, 1000, Rational(1, 1000000000)).pass);
  g = binomial_gate(1, 1000, Rational(1, 10000));
  CHECK(g.allowed == 1);
  CHECK(g.pass);
  CHECK_FALSE(binomial_gate(2, 1000, Rational(1, 10000)).pass);
  g = binomial_gate(30, 1000, Rational(1, 100));
  CHECK(g.rule.find("quantile") != std::string::npos);
  CHECK(g.allowed == binomial_quantile(1000, Rational(1, 100)));
  CHECK(binomial_gate(5, 10, Rational(3)).allowed == 10);
}

TEST_CASE("binomial quantile matches exact CDF") {
  for (unsigned n : {1u, 5u, 20u, 60u}) {
    for (const Rational& p : {Rational(1, 2), Rational(1, 7), Rational(1, 50), Rational(9, 10)}) {
      for (double level : {0.5, 0.9, 0.99999}) {
        const auto k = binomial_quantile(n, p, level);
        // Compare with 1e-30 slack: the quantile is computed in 100-digit floats.
        const Rational lv(static_cast<long long>(level * 100000 + 0.5), 100000);
        CHECK(binomial_cdf(n, p, static_cast<unsigned>(k)) >= lv - Rational(1, BigInt("1000000000000000000000000000000")));
        if (k > 0) CHECK(binomial_cdf(n, p, static_cast<unsigned>(k - 1)) < lv);
      }
    }
  }
  CHECK(binomial_quantile(100, Rational(0)) == 0);
  CHECK(binomial_quantile(100, Rational(1)) == 100);
}

TEST_CASE("hybrid campaign with no random part never fails") {
  const auto cfg = parse_config(
      "campaign_id = h-degenerate\np = 11\nlambdas = 2 2 1 1 1 1 1 1\nd_f = 2\nd_g = 2\nl = 2\nmodel = H1\n"
      "fixed_locator = 1:1, 3:1\nt = 2\ntrials = 200\nseed = 3\n");
  const auto c = prepare_campaign(cfg);
  CHECK(c.t_fixed == 2);
  CHECK(c.t_random == 0);
  const auto r = run_campaign(c, 2);
  CHECK(r.failures == 0);
  CHECK(r.model_mismatches == 0);
  // Every trial is identical.
  for (const auto& rec : r.records) CHECK(rec.realized == r.records[0].realized);
}

TEST_CASE("pole campaign runs and stays model consistent") {
  const auto cfg = parse_config(
      "campaign_id = b1\np = 13\nlambdas = 2 2 1 1 1 1 1 1 1 1\nd_f = 2\nd_g = 3\nl = 2\nmodel = B1\n"
      "g_roots = 1:1\nfixed_locator = 1:2\nlocator = 5:1\nt = 3\ntrials = 200\nseed = 5\nfixed_seed = 2\n");
  const auto c = prepare_campaign(cfg);
  CHECK(c.pole_codeword.column(0).vr == 1);
  const auto r = run_campaign(c, 2);
  CHECK(r.model_mismatches == 0);
  CHECK(r.gate.pass);
  auto unreduced = cfg;
  unreduced.pole_system = PoleKeySystem::Unreduced;
  const auto cu = prepare_campaign(unreduced);
  const auto ru = run_campaign(cu, 2);
  for (std::size_t k = 0; k < r.records.size(); ++k) CHECK(r.records[k].reason == ru.records[k].reason);
}
