// Command-line front end: encoding, decoding, simulation campaigns, bounds,
// brute-force minimum distance and the subset-sum constraint check.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "srf/bounds.hpp"
#include "srf/decoder.hpp"
#include "srf/experiments.hpp"
#include "srf/pole_code.hpp"

namespace {

using namespace srf;

struct CodeOptions {
  std::uint64_t p = 0;
  std::string alphas;
  std::string lambdas;
  unsigned d_f = 1, d_g = 1, ell = 1;
};

void add_code_options(CLI::App* app, CodeOptions& o, bool with_degrees = true) {
  app->add_option("--p", o.p, "field characteristic (prime)")->required();
  app->add_option("--lambdas", o.lambdas, "comma-separated multiplicities")->required();
  app->add_option("--alphas", o.alphas, "comma-separated evaluation points (default 0..n-1)");
  if (with_degrees) {
    app->add_option("--df", o.d_f, "numerator degree bound d_f")->required();
    app->add_option("--dg", o.d_g, "denominator degree bound d_g")->required();
    app->add_option("--l", o.ell, "interleaving order")->default_val(1);
  }
}

CodeParams code_params(const CodeOptions& o) {
  std::ostringstream cfg;
  cfg << "p = " << o.p << "\nlambdas = " << o.lambdas << "\nd_f = " << o.d_f << "\nd_g = " << o.d_g
      << "\nl = " << o.ell << '\n';
  if (!o.alphas.empty()) cfg << "alphas = " << o.alphas << '\n';
  return make_code_params(parse_config(cfg.str()));
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

FractionVector fraction_from(const CodeParams& cp, const std::string& f, const std::string& g) {
  FractionVector fv;
  std::stringstream ss(f);
  std::string part;
  while (std::getline(ss, part, ';')) fv.f.push_back(parse_poly(cp.field(), part));
  fv.g = parse_poly(cp.field(), g);
  return fv;
}

void print_fraction(const FractionVector& fv) {
  for (std::size_t i = 0; i < fv.f.size(); ++i) std::cout << "f" << i + 1 << ": " << to_string(fv.f[i]) << '\n';
  std::cout << "g: " << to_string(fv.g) << '\n';
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous rational function codes over prime fields"};
  app.require_subcommand(1);

  CodeOptions enc_o;
  std::string enc_f, enc_g;
  auto* enc = app.add_subcommand("encode", "encode a fraction vector without poles");
  add_code_options(enc, enc_o);
  enc->add_option("--f", enc_f, "numerators, coefficient lists separated by ';'")->required();
  enc->add_option("--g", enc_g, "denominator coefficient list")->required();

  CodeOptions encp_o;
  std::string encp_f, encp_g;
  auto* encp = app.add_subcommand("encode-poles", "encode a fraction vector as a pole word");
  add_code_options(encp, encp_o);
  encp->add_option("--f", encp_f, "numerators, coefficient lists separated by ';'")->required();
  encp->add_option("--g", encp_g, "denominator coefficient list")->required();

  CodeOptions dec_o;
  unsigned dec_t = 0;
  std::string dec_in, dec_solver = "implicit";
  auto* dec = app.add_subcommand("decode", "decode a received word (one line per point)");
  add_code_options(dec, dec_o);
  dec->add_option("--t", dec_t, "decoding radius")->required();
  dec->add_option("--word", dec_in, "word file, '-' for stdin")->default_val("-");
  dec->add_option("--solver", dec_solver, "implicit or explicit")->check(CLI::IsMember({"implicit", "explicit"}));

  CodeOptions decp_o;
  unsigned decp_t = 0;
  std::string decp_in, decp_sys = "reduced";
  auto* decp = app.add_subcommand("decode-poles", "decode a pole word ('vr ; r_1 ; ...' per point)");
  add_code_options(decp, decp_o);
  decp->add_option("--t", decp_t, "decoding radius")->required();
  decp->add_option("--word", decp_in, "word file, '-' for stdin")->default_val("-");
  decp->add_option("--system", decp_sys, "reduced or unreduced")->check(CLI::IsMember({"reduced", "unreduced"}));

  std::string sim_cfg, sim_out;
  std::optional<std::uint64_t> sim_seed, sim_trials;
  unsigned sim_threads = 0;
  auto* sim = app.add_subcommand("simulate", "run a Monte Carlo campaign and write per-trial CSV");
  sim->add_option("--config", sim_cfg, "campaign file")->required();
  sim->add_option("--out", sim_out, "CSV output path (default stdout)");
  sim->add_option("--seed", sim_seed, "override the master seed");
  sim->add_option("--trials", sim_trials, "override the trial count");
  sim->add_option("--threads", sim_threads, "worker threads (0 = all cores)");

  std::string b_thm = "1", b_nu, b_gap, b_radius;
  std::uint64_t b_q = 0;
  unsigned b_l = 1, b_t = 0;
  bool b_pref = false;
  auto* bnd = app.add_subcommand("bounds", "evaluate a failure probability bound");
  bnd->add_option("--thm", b_thm, "1, 2, h1, h2, b1 or b2")
      ->check(CLI::IsMember({"1", "2", "h1", "h2", "b1", "b2"}));
  bnd->add_option("--q", b_q, "field size")->required();
  bnd->add_option("--l", b_l, "interleaving order")->required();
  bnd->add_option("--gap", b_gap, "radius minus t (rational, e.g. 6 or 10/3)");
  bnd->add_option("--radius", b_radius, "t_max or t_bar as a rational (with --t)");
  bnd->add_option("--t", b_t, "number of random errors");
  bnd->add_option("--nu", b_nu, "root multiplicities of the locator, comma-separated");
  bnd->add_flag("--prefactored", b_pref, "include 1/(q-1) for pole bounds");

  CodeOptions md_o;
  bool md_poles = false;
  auto* md = app.add_subcommand("mindist", "brute-force minimum distance of a small code");
  add_code_options(md, md_o);
  md->add_flag("--poles", md_poles, "include fraction vectors with poles at the points");

  CodeOptions cc_o;
  auto* cc = app.add_subcommand("check-constraint", "search for a subset-sum witness");
  add_code_options(cc, cc_o, false);
  unsigned cc_df = 1, cc_dg = 1;
  cc->add_option("--df", cc_df)->required();
  cc->add_option("--dg", cc_dg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*enc) {
      const CodeParams cp = code_params(enc_o);
      std::cout << to_string(encode(fraction_from(cp, enc_f, enc_g), cp));
    } else if (*encp) {
      const CodeParams cp = code_params(encp_o);
      std::cout << to_string(encode_multiprecision(fraction_from(cp, encp_f, encp_g), cp));
    } else if (*dec) {
      const CodeParams cp = code_params(dec_o);
      const ReceivedWord R = parse_received_word(read_input(dec_in), cp);
      const auto out =
          decode(R, cp, dec_t, dec_solver == "explicit" ? KeySolver::Explicit : KeySolver::Implicit);
      if (!out.success()) {
        std::cout << "failure: " << to_string(out.reason) << '\n';
        return 1;
      }
      print_fraction(*out.fraction);
    } else if (*decp) {
      const CodeParams cp = code_params(decp_o);
      const PoleWord R = parse_pole_word(read_input(decp_in), cp);
      const auto out = decode_poles(R, cp, decp_t,
                                    decp_sys == "unreduced" ? PoleKeySystem::Unreduced : PoleKeySystem::Reduced);
      if (!out.success()) {
        std::cout << "failure: " << to_string(out.reason) << '\n';
        return 1;
      }
      print_fraction(*out.fraction);
    } else if (*sim) {
      CampaignConfig cfg = parse_config(read_input(sim_cfg));
      if (sim_seed) cfg.seed = *sim_seed;
      if (sim_trials) cfg.trials = *sim_trials;
      const Campaign c = prepare_campaign(cfg);
      const CampaignReport rep = run_campaign(c, sim_threads);
      const std::string csv = csv_header() + csv_rows(c, rep);
      if (sim_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(sim_out);
        out << csv;
      }
      std::cerr << summary(c, rep);
      return rep.gate.pass ? 0 : 1;
    } else if (*bnd) {
      RootMultiplicities nu;
      if (!b_nu.empty()) {
        std::stringstream ss(b_nu);
        std::string item;
        while (std::getline(ss, item, ',')) nu.push_back(static_cast<unsigned>(std::stoul(item)));
      }
      Rational radius;
      if (!b_gap.empty()) radius = parse_rational(b_gap) + b_t;
      else if (!b_radius.empty()) radius = parse_rational(b_radius);
      else throw std::invalid_argument("give --gap or --radius");
      BoundValue v;
      if (b_thm == "1") v = bound_thm1(b_q, b_l, b_t, radius, nu);
      else if (b_thm == "2") v = bound_thm2(b_q, b_l, b_t, radius, nu);
      else if (b_thm == "h1") v = bound_thm1_hybrid(b_q, b_l, b_t, radius, nu);
      else if (b_thm == "h2") v = bound_thm2_hybrid(b_q, b_l, b_t, radius, nu);
      else if (b_thm == "b1") v = bound_thm1_poles(b_q, b_l, b_t, radius, nu, b_pref);
      else v = bound_thm2_poles(b_q, b_l, b_t, radius, nu, b_pref);
      std::cout << to_string(v.value) << '\n' << "≈ q^" << v.log_q << '\n';
    } else if (*md) {
      const CodeParams cp = code_params(md_o);
      const auto r = md_poles ? min_distance_bruteforce_poles(cp) : min_distance_bruteforce(cp);
      std::cout << "codewords " << r.codewords << "\nmin_distance " << r.min_distance << "\ncollisions "
                << r.collisions << '\n';
    } else if (*cc) {
      cc_o.d_f = cc_df;
      cc_o.d_g = cc_dg;
      Exponents lam;
      std::stringstream ss(cc_o.lambdas);
      std::string item;
      while (std::getline(ss, item, ',')) lam.push_back(static_cast<unsigned>(std::stoul(item)));
      const auto w = check_subset_sum_constraint(lam, cc_df, cc_dg);
      if (!w) {
        std::cout << "none\n";
      } else {
        auto show = [](const std::vector<std::size_t>& s) {
          std::string out;
          for (auto j : s) out += (out.empty() ? "" : ",") + std::to_string(j + 1);
          return out.empty() ? std::string("-") : out;
        };
        std::cout << "S0 " << show(w->s0) << "\nSinf " << show(w->s_inf) << "\neta " << w->eta + 1 << "\ngamma "
                  << w->gamma + 1 << "\ndelta0 " << w->delta0 << "\ndelta_inf " << w->delta_inf << '\n';
      }
    }
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
