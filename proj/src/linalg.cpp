#include "srf/linalg.hpp"

namespace srf {

std::vector<std::size_t> rref(const Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(sel, k), m.at(row, k));
    const Elem inv = F.inv(m.at(row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(row, k) = F.mul(m.at(row, k), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, c) == 0) continue;
      const Elem f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m.at(r, k) = F.sub(m.at(r, k), F.mul(f, m.at(row, k)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Elem>> nullspace(const Field& F, Matrix m) {
  const auto pivots = rref(F, m);
  std::vector<int> pivot_row(m.cols(), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace srf
