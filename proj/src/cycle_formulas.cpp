#include "torbin/cycle_formulas.hpp"

#include <numeric>
#include <stdexcept>

#include "torbin/numtheory.hpp"

namespace torbin {

namespace {

void check_shifts(GridShape shape, unsigned i, unsigned j) {
  if (i >= shape.rows || j >= shape.cols)
    throw std::out_of_range("cycle formula: shift exponent outside group");
}

}  // namespace

CycleCount cycles_rotation(GridShape shape, unsigned i, unsigned j) {
  check_shifts(shape, i, j);
  // std::gcd(0, n) == n, so i = 0 lands on order c = 1 without a special case.
  const unsigned c = shape.rows / std::gcd(i, shape.rows);
  const unsigned d = shape.cols / std::gcd(j, shape.cols);
  return shape.cell_count() / static_cast<unsigned>(lcm(c, d));
}

CycleCount cycles_row_reflection(GridShape shape, unsigned i, unsigned j) {
  check_shifts(shape, i, j);
  const unsigned m = shape.rows;
  const unsigned g = std::gcd(j, shape.cols);  // = n / order of the column rotation
  const unsigned d = shape.cols / g;
  if (d % 2 == 0) return m * g;
  // d odd: one row class is fixed when m is odd, none when m and i are even,
  // two when m is even and i is odd.
  if (m % 2 == 1) return (m + 1) * g / 2;
  if (i % 2 == 0) return m * g / 2;
  return (m + 2) * g / 2;
}

CycleCount cycles_col_reflection(GridShape shape, unsigned i, unsigned j) {
  check_shifts(shape, i, j);
  return cycles_row_reflection(shape.transposed(), j, i);
}

CycleCount cycles_full_reflection(GridShape shape, unsigned i, unsigned j) {
  check_shifts(shape, i, j);
  const unsigned mn = shape.cell_count();
  const bool m_odd = shape.rows % 2 == 1;
  const bool n_odd = shape.cols % 2 == 1;
  if (m_odd && n_odd) return (mn + 1) / 2;
  if (m_odd) return mn / 2 + (j % 2 == 1 ? 1 : 0);
  if (n_odd) return mn / 2 + (i % 2 == 1 ? 1 : 0);
  return mn / 2 + (i % 2 == 1 && j % 2 == 1 ? 2 : 0);
}

}  // namespace torbin
