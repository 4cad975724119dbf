#include "doctest.h"
#include "srf/linalg.hpp"

using namespace srf;

TEST_CASE("nullspace vectors annihilate the matrix and rank-nullity holds") {
  const Field F(7);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng.uniform_below(6), c = 1 + rng.uniform_below(7);
    Matrix m(r, c);
    // Low-rank matrices are common: sometimes copy rows.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = (i > 0 && rng.uniform_below(3) == 0) ? m.at(i - 1, j) : rng.uniform(F);
    Matrix e = m;
    const auto pivots = rref(F, e);
    const auto basis = nullspace(F, m);
    CHECK(pivots.size() + basis.size() == c);
    for (const auto& v : basis) {
      REQUIRE(v.size() == c);
      for (std::size_t i = 0; i < r; ++i) {
        Elem s = 0;
        for (std::size_t j = 0; j < c; ++j) s = F.add(s, F.mul(m.at(i, j), v[j]));
        CHECK(s == 0);
      }
    }
    // Echelon shape: pivots strictly increase and pivot columns are unit vectors.
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (k) CHECK(pivots[k] > pivots[k - 1]);
      for (std::size_t i = 0; i < r; ++i) CHECK(e.at(i, pivots[k]) == (i == k ? 1u : 0u));
    }
  }
}

TEST_CASE("identity has trivial nullspace") {
  const Field F(5);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = 1;
  CHECK(nullspace(F, m).empty());
  Matrix z(2, 3);
  CHECK(nullspace(F, z).size() == 3);
}
