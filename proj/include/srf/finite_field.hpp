#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace srf {

// Residues are plain 64-bit words kept in [0, p) by the owning Field.
using Elem = std::uint64_t;

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Prime field F_p with p < 2^62. Immutable after construction.
class Field {
public:
  explicit Field(std::uint64_t p);

  std::uint64_t prime() const { return p_; }

  Elem reduce(std::uint64_t a) const { return a % p_; }
  Elem from_signed(std::int64_t a) const;

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws FieldError on a == 0.
  Elem inv(Elem a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// xoshiro256** seeded through splitmix64. The algorithm is part of the
// reproducibility contract of every experiment and must not change.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  Elem uniform(const Field& F) { return uniform_below(F.prime()); }
  Elem uniform_nonzero(const Field& F) { return 1 + uniform_below(F.prime() - 1); }

  // Independent stream for trial `index` of a campaign seeded with `master`:
  // seed = splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019)).
  static Rng for_trial(std::uint64_t master, std::uint64_t index);
  static std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace srf
