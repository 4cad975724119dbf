#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srf/bounds.hpp"
#include "srf/decoder.hpp"
#include "srf/error_models.hpp"

namespace srf {

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class EpsilonMode { Random, Adversarial, Explicit };

// Flat "key = value" campaign description. Blank lines and lines starting
// with '#' are ignored. Point indices in locators are 1-based.
struct CampaignConfig {
  std::string campaign_id = "campaign";
  std::uint64_t p = 0;
  std::vector<Elem> alphas;  // defaults to 0, 1, ..., n-1
  Exponents lambdas;
  unsigned d_f = 0, d_g = 0, ell = 1;
  ModelKind model = ModelKind::E1;
  Exponents locator;        // part drawn afresh each trial
  Exponents fixed_locator;  // frozen part (hybrid and pole models)
  unsigned t = 0;
  std::optional<unsigned> t_fixed;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  std::uint64_t fixed_seed = 1;
  EpsilonMode epsilon = EpsilonMode::Random;
  Elem beta = 2;
  std::optional<std::vector<Poly>> f;
  std::optional<Poly> g;
  Exponents g_roots;  // multiplicities of g at the points when g is generated
  std::map<std::size_t, std::vector<Poly>> explicit_epsilon;  // 0-based point -> column
  std::map<std::size_t, PoleColumn> explicit_frozen;           // 0-based point -> column
  KeySolver solver = KeySolver::Implicit;
  PoleKeySystem pole_system = PoleKeySystem::Reduced;
  bool prefactored_pole_bound = false;
};

CampaignConfig parse_config(const std::string& text);
CodeParams make_code_params(const CampaignConfig& cfg);

// Everything fixed for the lifetime of a campaign.
struct Campaign {
  CampaignConfig config;
  CodeParams params;
  FractionVector fraction;
  ErrorSpec spec;
  ReceivedWord codeword;        // pole-free models
  PoleCodeword pole_codeword;   // pole models
  unsigned t_fixed = 0;
  unsigned t_random = 0;
  Rational radius;  // t_max, t_bar_i or t_bar_e
  BoundValue bound;
};

// Validates every hypothesis of the matching theorem; the exception names the violated one.
Campaign prepare_campaign(const CampaignConfig& cfg);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Exponents realized;
  bool success = false;
  std::string reason;  // "none", a decoder failure reason, or "wrong-codeword"
  bool model_consistent = true;
};

TrialRecord run_trial(const Campaign& c, std::uint64_t index);

struct GateVerdict {
  std::uint64_t failures = 0;
  std::uint64_t trials = 0;
  std::uint64_t allowed = 0;
  std::string rule;
  bool pass = false;
};

// Smallest k with P[Binomial(n, p) <= k] >= level.
std::uint64_t binomial_quantile(std::uint64_t n, const Rational& p, double level = 0.99999);
GateVerdict binomial_gate(std::uint64_t failures, std::uint64_t trials, const Rational& bound);

struct CampaignReport {
  std::vector<TrialRecord> records;
  std::uint64_t failures = 0;
  std::uint64_t model_mismatches = 0;
  std::map<std::string, std::uint64_t> reasons;
  GateVerdict gate;
};

// Runs trials in parallel (SRF_THREADS or `threads` caps the pool); records stay in trial order.
CampaignReport run_campaign(const Campaign& c, unsigned threads = 0);

std::string csv_header();
std::string csv_rows(const Campaign& c, const CampaignReport& r);
std::string summary(const Campaign& c, const CampaignReport& r);

}  // namespace srf
