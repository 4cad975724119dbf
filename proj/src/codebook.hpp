#pragma once

// Internal helpers shared by the two brute-force distance oracles.

#include <string>
#include <vector>

#include "srf/srf_code.hpp"

namespace srf {

std::vector<std::string> split_fields(const std::string& line, char sep);
std::vector<std::string> content_lines(const std::string& text);

namespace detail {

// Codewords flattened to Taylor coefficients, column by column, so pairwise
// distances reduce to comparing coefficient runs. A word may carry a
// claimed valuation per point; the pole-free code leaves it empty.
class Codebook {
public:
  explicit Codebook(const CodeParams& cp);

  void add(std::vector<Elem> flat, std::vector<unsigned> vr);
  std::size_t size() const { return words_.size(); }
  unsigned pair_distance(std::size_t a, std::size_t b) const;
  MinDistanceResult minimum(const std::vector<FractionVector>& fractions) const;

private:
  const CodeParams& cp_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<Elem>> words_;
  std::vector<std::vector<unsigned>> vrs_;
};

std::vector<Elem> flatten_column_taylor(const Field& F, const PointSystem& ps, std::size_t j,
                                        const std::vector<Poly>& col);

}  // namespace detail
}  // namespace srf
