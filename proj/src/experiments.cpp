#include "srf/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "codebook.hpp"

namespace srf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Numbers separated by commas and/or whitespace.
std::vector<std::uint64_t> parse_list(const std::string& v, const std::string& key) {
  std::string text = v;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream is(text);
  std::vector<std::uint64_t> out;
  for (std::string t; is >> t;) {
    std::uint64_t x = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (ec != std::errc() || end != t.data() + t.size())
      throw ConfigError("key '" + key + "': not a number: '" + t + "'");
    out.push_back(x);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  const auto xs = parse_list(v, key);
  if (xs.size() != 1) throw ConfigError("key '" + key + "' expects one number");
  return xs[0];
}

std::vector<Poly> parse_poly_list(const Field& F, const std::string& v) {
  std::vector<Poly> out;
  for (const auto& field : split_fields(v, ';')) out.push_back(parse_poly(F, field));
  return out;
}

PoleColumn parse_pole_column(const Field& F, const std::string& v, const std::string& key) {
  const auto fields = split_fields(v, ';');
  if (fields.size() < 2) throw ConfigError("key '" + key + "' expects 'vr ; r_1 ; ...'");
  PoleColumn c;
  c.vr = static_cast<unsigned>(parse_u64(fields[0], key));
  for (std::size_t i = 1; i < fields.size(); ++i) c.r.push_back(parse_poly(F, fields[i]));
  return c;
}

std::size_t point_suffix(const std::string& key, const std::string& prefix) {
  const auto idx = parse_u64(key.substr(prefix.size()), key);
  if (idx == 0) throw ConfigError("point indices are 1-based: '" + key + "'");
  return idx - 1;
}

std::string locator_field(const Exponents& e) {
  std::string s = exponents_to_string(e);
  std::replace(s.begin(), s.end(), ',', ' ');
  return s;
}

FractionVector generate_fraction(const CodeParams& cp, const Exponents& g_roots, Rng& rng) {
  const Field& F = cp.field();
  const auto& ps = cp.points();
  const Poly base = ps.locator(g_roots);
  if (base.degree() > static_cast<int>(cp.d_g()) - 1)
    throw ConfigError("g_roots has degree above d_g - 1");
  const unsigned free_deg = cp.d_g() - 1 - static_cast<unsigned>(base.degree());
  for (unsigned attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Elem> hc(free_deg + 1);
    for (unsigned k = 0; k < free_deg; ++k) hc[k] = rng.uniform(F);
    hc[free_deg] = 1;
    const Poly h(hc);
    bool clean = true;
    for (std::size_t j = 0; j < cp.n() && clean; ++j) clean = eval(F, h, ps.alpha(j)) != 0;
    if (!clean) continue;
    FractionVector fv;
    fv.g = mul(F, base, h);
    for (unsigned i = 0; i < cp.ell(); ++i) {
      std::vector<Elem> fc(cp.d_f());
      for (auto& c : fc) c = rng.uniform(F);
      fv.f.push_back(Poly(fc));
    }
    if (is_reduced(F, fv)) return fv;
  }
  throw ConfigError("could not generate a reduced fraction vector");
}

}  // namespace

CampaignConfig parse_config(const std::string& text) {
  CampaignConfig cfg;
  std::vector<std::pair<std::string, std::string>> entries;
  for (const auto& line : content_lines(text)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value': '" + line + "'");
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  // The field must be known before polynomials can be parsed.
  for (const auto& [k, v] : entries)
    if (k == "p") cfg.p = parse_u64(v, k);
  if (cfg.p == 0) throw ConfigError("missing key 'p'");
  const Field F(cfg.p);
  std::string locator_text = "1", fixed_text = "1", g_roots_text = "1";
  for (const auto& [k, v] : entries) {
    if (k == "p") continue;
    if (k == "campaign_id") cfg.campaign_id = v;
    else if (k == "alphas") {
      cfg.alphas.clear();
      for (auto a : parse_list(v, k)) cfg.alphas.push_back(F.reduce(a));
    } else if (k == "lambdas") {
      cfg.lambdas.clear();
      for (auto a : parse_list(v, k)) cfg.lambdas.push_back(static_cast<unsigned>(a));
    } else if (k == "d_f") cfg.d_f = static_cast<unsigned>(parse_u64(v, k));
    else if (k == "d_g") cfg.d_g = static_cast<unsigned>(parse_u64(v, k));
    else if (k == "l") cfg.ell = static_cast<unsigned>(parse_u64(v, k));
    else if (k == "model") cfg.model = parse_model_kind(v);
    else if (k == "locator") locator_text = v;
    else if (k == "fixed_locator") fixed_text = v;
    else if (k == "t") cfg.t = static_cast<unsigned>(parse_u64(v, k));
    else if (k == "t_fixed") cfg.t_fixed = static_cast<unsigned>(parse_u64(v, k));
    else if (k == "trials") cfg.trials = parse_u64(v, k);
    else if (k == "seed") cfg.seed = parse_u64(v, k);
    else if (k == "fixed_seed") cfg.fixed_seed = parse_u64(v, k);
    else if (k == "beta") cfg.beta = F.reduce(parse_u64(v, k));
    else if (k == "epsilon") {
      if (v == "random") cfg.epsilon = EpsilonMode::Random;
      else if (v == "adversarial") cfg.epsilon = EpsilonMode::Adversarial;
      else if (v == "explicit") cfg.epsilon = EpsilonMode::Explicit;
      else throw ConfigError("epsilon must be random, adversarial or explicit");
    } else if (k == "f") cfg.f = parse_poly_list(F, v);
    else if (k == "g") cfg.g = parse_poly(F, v);
    else if (k == "g_roots") g_roots_text = v;
    else if (k.rfind("epsilon.", 0) == 0) cfg.explicit_epsilon[point_suffix(k, "epsilon.")] = parse_poly_list(F, v);
    else if (k.rfind("frozen.", 0) == 0) cfg.explicit_frozen[point_suffix(k, "frozen.")] = parse_pole_column(F, v, k);
    else if (k == "solver") {
      if (v == "implicit") cfg.solver = KeySolver::Implicit;
      else if (v == "explicit") cfg.solver = KeySolver::Explicit;
      else throw ConfigError("solver must be implicit or explicit");
    } else if (k == "pole_system") {
      if (v == "reduced") cfg.pole_system = PoleKeySystem::Reduced;
      else if (v == "unreduced") cfg.pole_system = PoleKeySystem::Unreduced;
      else throw ConfigError("pole_system must be reduced or unreduced");
    } else if (k == "prefactored_pole_bound") cfg.prefactored_pole_bound = parse_u64(v, k) != 0;
    else throw ConfigError("unknown key '" + k + "'");
  }
  if (cfg.lambdas.empty()) throw ConfigError("missing key 'lambdas'");
  if (cfg.alphas.empty())
    for (std::size_t j = 0; j < cfg.lambdas.size(); ++j) cfg.alphas.push_back(F.reduce(j));
  if (cfg.alphas.size() != cfg.lambdas.size()) throw ConfigError("alphas and lambdas differ in length");
  try {
    cfg.locator = parse_exponents(locator_text, cfg.lambdas.size());
    cfg.fixed_locator = parse_exponents(fixed_text, cfg.lambdas.size());
    cfg.g_roots = parse_exponents(g_roots_text, cfg.lambdas.size());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.f.has_value() != cfg.g.has_value()) throw ConfigError("give both f and g, or neither");
  return cfg;
}

CodeParams make_code_params(const CampaignConfig& cfg) {
  const Field F(cfg.p);
  std::vector<Point> pts;
  for (std::size_t j = 0; j < cfg.lambdas.size(); ++j) pts.push_back({cfg.alphas[j], cfg.lambdas[j]});
  return CodeParams(PointSystem(F, std::move(pts)), cfg.d_f, cfg.d_g, cfg.ell);
}

Campaign prepare_campaign(const CampaignConfig& cfg) {
  CodeParams cp = make_code_params(cfg);
  const Field& F = cp.field();
  const bool poles = is_pole_model(cfg.model);
  Rng fixed_rng(cfg.fixed_seed);

  FractionVector fv;
  if (cfg.f) {
    fv.f = *cfg.f;
    fv.g = *cfg.g;
    check_fraction(fv, cp);
    fv = normalize(F, fv);
  } else {
    fv = generate_fraction(cp, cfg.g_roots, fixed_rng);
  }
  const Poly& M = cp.points().M();
  if (!poles && gcd(F, fv.g, M).degree() > 0)
    throw ConfigError("pole-free models need g coprime to the points");

  const bool hybrid = cfg.model == ModelKind::H1 || cfg.model == ModelKind::H2 || poles;
  if (!hybrid && total_degree(cfg.fixed_locator) > 0) throw ConfigError("E models take no fixed_locator");
  const unsigned fixed_deg = total_degree(cfg.fixed_locator);
  const unsigned t_fixed = cfg.t_fixed.value_or(fixed_deg);
  if (fixed_deg > t_fixed) throw ConfigError("hypothesis violated: deg(fixed locator) <= t_fixed");
  if (t_fixed > cfg.t) throw ConfigError("hypothesis violated: t_fixed <= t");
  const unsigned t_random = cfg.t - t_fixed;
  const long long gap = cp.redundancy();
  const std::uint64_t q = cfg.p;

  Rational radius;
  BoundValue bound;
  std::optional<ErrorSpec> spec;
  switch (cfg.model) {
    case ModelKind::E1:
    case ModelKind::E2: {
      radius = t_max_from_gap(cfg.ell, gap);
      bound = cfg.model == ModelKind::E1 ? bound_thm1(q, cfg.ell, cfg.t, radius, cfg.locator)
                                         : bound_thm2(q, cfg.ell, cfg.t, radius, cfg.locator);
      spec = cfg.model == ModelKind::E1 ? ErrorSpec::e1(cp, cfg.locator) : ErrorSpec::e2(cp, cfg.locator);
      break;
    }
    case ModelKind::H1:
    case ModelKind::H2: {
      radius = t_bar_from_gap(cfg.ell, gap, t_fixed);
      bound = cfg.model == ModelKind::H1 ? bound_thm1_hybrid(q, cfg.ell, t_random, radius, cfg.locator)
                                         : bound_thm2_hybrid(q, cfg.ell, t_random, radius, cfg.locator);
      std::vector<std::vector<Poly>> eps;
      switch (cfg.epsilon) {
        case EpsilonMode::Random: eps = draw_epsilon(cp, cfg.fixed_locator, fixed_rng); break;
        case EpsilonMode::Adversarial: eps = adversarial_epsilon(cp, cfg.fixed_locator, fv, cfg.beta); break;
        case EpsilonMode::Explicit:
          eps.assign(cp.n(), {});
          for (const auto& [j, col] : cfg.explicit_epsilon) {
            if (j >= cp.n()) throw ConfigError("epsilon point index out of range");
            eps[j] = col;
          }
          break;
      }
      spec = cfg.model == ModelKind::H1 ? ErrorSpec::h1(cp, cfg.locator, cfg.fixed_locator, std::move(eps))
                                        : ErrorSpec::h2(cp, cfg.locator, cfg.fixed_locator, std::move(eps));
      break;
    }
    case ModelKind::B1:
    case ModelKind::B2: {
      radius = t_bar_from_gap(cfg.ell, gap, t_fixed);
      bound = cfg.model == ModelKind::B1
                  ? bound_thm1_poles(q, cfg.ell, t_random, radius, cfg.locator, cfg.prefactored_pole_bound)
                  : bound_thm2_poles(q, cfg.ell, t_random, radius, cfg.locator, cfg.prefactored_pole_bound);
      std::vector<PoleColumn> frozen;
      if (cfg.epsilon == EpsilonMode::Explicit) {
        frozen.assign(cp.n(), {});
        for (const auto& [j, col] : cfg.explicit_frozen) {
          if (j >= cp.n()) throw ConfigError("frozen point index out of range");
          frozen[j] = col;
        }
      } else if (cfg.epsilon == EpsilonMode::Random) {
        frozen = draw_frozen(cp, fv, cfg.fixed_locator, fixed_rng);
      } else {
        throw ConfigError("adversarial fixed columns are only defined for hybrid models");
      }
      spec = cfg.model == ModelKind::B1 ? ErrorSpec::b1(cp, fv, cfg.locator, cfg.fixed_locator, std::move(frozen))
                                        : ErrorSpec::b2(cp, fv, cfg.locator, cfg.fixed_locator, std::move(frozen));
      break;
    }
  }
  if (cfg.d_f + cfg.t > cp.L() || cfg.d_g + cfg.t > cp.L())
    throw ConfigError("hypothesis violated: d_f + t <= L and d_g + t <= L");

  ReceivedWord C;
  PoleCodeword PC;
  if (poles) PC = spec->pole_codeword();
  else C = encode(fv, cp);
  return Campaign{cfg, std::move(cp), std::move(fv), std::move(*spec), std::move(C), std::move(PC),
                  t_fixed, t_random, radius, bound};
}

TrialRecord run_trial(const Campaign& c, std::uint64_t index) {
  TrialRecord rec;
  rec.trial = index;
  rec.seed = Rng::trial_seed(c.config.seed, index);
  Rng rng(rec.seed);
  const CodeParams& cp = c.params;
  DecodeOutcome out;
  if (is_pole_model(c.spec.kind())) {
    const PoleWord R = sample_pole(c.spec, cp, rng);
    rec.realized = pole_error_matrix(R, c.pole_codeword, cp).locator;
    out = decode_poles(R, cp, c.config.t, c.config.pole_system);
  } else {
    const ReceivedWord R = sample(c.spec, c.codeword, cp, rng);
    rec.realized = error_locator(R, c.codeword, cp);
    out = decode(R, cp, c.config.t, c.config.solver);
  }
  const Exponents full = c.spec.locator();
  rec.model_consistent = is_exact_model(c.spec.kind()) ? rec.realized == full : divides(rec.realized, full);
  if (!out.success()) {
    rec.reason = to_string(out.reason);
  } else if (!same_fraction(cp.field(), *out.fraction, c.fraction)) {
    rec.reason = "wrong-codeword";
  } else {
    rec.success = true;
    rec.reason = "none";
  }
  return rec;
}

std::uint64_t binomial_quantile(std::uint64_t n, const Rational& p, double level) {
  using Float = boost::multiprecision::cpp_bin_float_100;
  if (p <= 0) return 0;
  if (p >= 1) return n;
  const Float pf = Float(numerator(p)) / Float(denominator(p));
  const Float ratio = pf / (Float(1) - pf);
  Float pmf = pow(Float(1) - pf, static_cast<long long>(n));
  Float cdf = pmf;
  const Float target(level);
  std::uint64_t k = 0;
  while (cdf < target && k < n) {
    pmf *= ratio * Float(n - k) / Float(k + 1);
    ++k;
    cdf += pmf;
  }
  return k;
}

GateVerdict binomial_gate(std::uint64_t failures, std::uint64_t trials, const Rational& bound) {
  GateVerdict g;
  g.failures = failures;
  g.trials = trials;
  const Rational p = bound > 1 ? Rational(1) : bound;
  const Rational expected = p * trials;
  if (expected < Rational(1, 1000)) {
    g.allowed = 0;
    g.rule = "N*B < 1e-3: no failures allowed";
  } else if (expected < 1) {
    g.allowed = 1;
    g.rule = "N*B < 1: at most one failure";
  } else {
    g.allowed = binomial_quantile(trials, p);
    g.rule = "0.99999 binomial quantile";
  }
  g.pass = failures <= g.allowed;
  return g;
}

CampaignReport run_campaign(const Campaign& c, unsigned threads) {
  const std::uint64_t N = c.config.trials;
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SRF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) workers = std::min(workers, static_cast<unsigned>(v));
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(N, 1)));

  CampaignReport rep;
  rep.records.resize(N);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::uint64_t i; !failed && (i = next.fetch_add(1)) < N;) rep.records[i] = run_trial(c, i);
    } catch (...) {
      if (!failed.exchange(true)) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  for (const auto& r : rep.records) {
    if (!r.success) ++rep.failures;
    if (!r.model_consistent) ++rep.model_mismatches;
    ++rep.reasons[r.reason];
  }
  rep.gate = binomial_gate(rep.failures, N, c.bound.value);
  return rep;
}

std::string csv_header() {
  return "campaign_id,trial,seed,model,realized_locator,outcome,reason,t,t_split,bound_num,bound_den\n";
}

std::string csv_rows(const Campaign& c, const CampaignReport& r) {
  std::ostringstream os;
  const std::string split = std::to_string(c.t_fixed) + "+" + std::to_string(c.t_random);
  const std::string num = numerator(c.bound.value).str();
  const std::string den = denominator(c.bound.value).str();
  const std::string model = to_string(c.spec.kind());
  for (const auto& rec : r.records)
    os << c.config.campaign_id << ',' << rec.trial << ',' << rec.seed << ',' << model << ','
       << locator_field(rec.realized) << ',' << (rec.success ? "success" : "failure") << ',' << rec.reason << ','
       << c.config.t << ',' << split << ',' << num << ',' << den << '\n';
  return os.str();
}

std::string summary(const Campaign& c, const CampaignReport& r) {
  std::ostringstream os;
  os << "campaign " << c.config.campaign_id << " model " << to_string(c.spec.kind()) << " q=" << c.config.p
     << " l=" << c.config.ell << " t=" << c.config.t << " (" << c.t_fixed << "+" << c.t_random << ")\n";
  os << "  radius " << to_string(c.radius) << ", bound " << to_string(c.bound.value) << " ~ q^"
     << c.bound.log_q << '\n';
  os << "  trials " << r.gate.trials << ", failures " << r.failures << ", allowed " << r.gate.allowed << " ("
     << r.gate.rule << ") -> " << (r.gate.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& [reason, count] : r.reasons) os << "  " << reason << ": " << count << '\n';
  if (r.model_mismatches) os << "  realized locators outside the model: " << r.model_mismatches << '\n';
  return os.str();
}

}  // namespace srf
