#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srf/pole_code.hpp"

namespace srf {

class DecodeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class FailureReason {
  None,
  NoNonzeroSolution,
  GcdDegreeExceedsT,
  NumeratorDegree,
  DenominatorDegree,
  ReencodeMismatch,
};

// Kebab-case names used in reports ("no-nonzero-solution", ...); "none" for success.
std::string to_string(FailureReason r);

struct DecodeOutcome {
  std::optional<FractionVector> fraction;
  FailureReason reason = FailureReason::None;

  bool success() const { return fraction.has_value(); }
  bool operator==(const DecodeOutcome&) const = default;
};

// weight * psi_i == phi * rhs_i (mod modulus) with phi = phi_factor * phi'.
// Unknowns: phi' coefficients (phi_len of them) and psi_i coefficients
// (psi_len each). phi_total is d_g + t, the bound on the full phi.
struct KeyEqSystem {
  Field F;
  unsigned ell = 0;
  Poly modulus;
  Poly weight;
  std::vector<Poly> rhs;
  Poly phi_factor;
  unsigned phi_len = 0;
  unsigned psi_len = 0;
  unsigned phi_total = 0;
};

struct KeySolution {
  Poly phi;  // includes phi_factor
  std::vector<Poly> psi;

  bool operator==(const KeySolution&) const = default;
};

// Explicit system for the pole-free key equations psi_i = phi R_i mod M.
KeyEqSystem build_key_system(const ReceivedWord& R, const CodeParams& cp, unsigned t);
// CRT_M((x - a_j)^vr_j) psi_i = phi R_i mod M.
KeyEqSystem build_pole_key_system(const PoleWord& R, const CodeParams& cp, unsigned t);
// psi_i = phi' R'_i mod M / M_inf with phi = M_inf phi'.
KeyEqSystem build_reduced_key_system(const PoleWord& R, const CodeParams& cp, unsigned t);

// Nonzero solution minimizing max(deg phi, deg psi), or nothing when the
// solution space is trivial. Among minimal solutions the choice is fixed by
// a canonical echelon form on (psi_l, ..., psi_1, phi) coefficients, high
// degrees first, so every solver path returns the same element.
std::optional<KeySolution> solve_min_degree(const KeyEqSystem& sys);
// Pole-free variant with psi_i implicit as phi R_i rem M.
std::optional<KeySolution> solve_min_degree_implicit(const ReceivedWord& R, const CodeParams& cp, unsigned t);

// Direct substitution check of a candidate solution, degree bounds included.
bool satisfies(const KeyEqSystem& sys, const KeySolution& s);

enum class KeySolver { Implicit, Explicit };
enum class PoleKeySystem { Reduced, Unreduced };

DecodeOutcome decode(const ReceivedWord& R, const CodeParams& cp, unsigned t, KeySolver solver = KeySolver::Implicit);
DecodeOutcome decode_poles(const PoleWord& R, const CodeParams& cp, unsigned t,
                           PoleKeySystem system = PoleKeySystem::Reduced);

}  // namespace srf
