#include "torbin/counting.hpp"

#include <stdexcept>
#include <string>

#include "torbin/cycle_formulas.hpp"

namespace torbin {
namespace {

// All counting formulas divide exactly; a remainder means the formula (or a
// cycle count feeding it) is wrong, so fail loudly rather than truncate.
Natural exact_div(const Natural& numerator, std::uint64_t denominator,
                  const char* what) {
  Natural q, r;
  divide_qr(numerator, Natural(denominator), q, r);
  if (r != 0) {
    throw std::logic_error(std::string(what) + ": sum not divisible by " +
                           std::to_string(denominator));
  }
  return q;
}

Natural necklace_numerator(std::uint64_t n) {
  Natural sum = 0;
  for (std::uint64_t d : divisors(n)) {
    sum += Natural(euler_phi(d)) * pow2(n / d);
  }
  return sum;
}

}  // namespace

OrbitCount necklace_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("necklace_count: n must be positive");
  return exact_div(necklace_numerator(n), n, "necklace_count");
}

OrbitCount bracelet_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bracelet_count: n must be positive");
  // Over the common denominator 4n: twice the necklace numerator plus the
  // reflection term, which depends on the parity of n.
  Natural num = 2 * necklace_numerator(n);
  if (n % 2 == 1) {
    num += Natural(4) * n * pow2((n - 1) / 2);
  } else {
    num += Natural(3) * n * pow2(n / 2);
  }
  return exact_div(num, 4 * n, "bracelet_count");
}

OrbitCount count_cyclic(GridShape shape) {
  const std::uint64_t m = shape.rows;
  const std::uint64_t n = shape.cols;
  Natural sum = 0;
  for (std::uint64_t c : divisors(m)) {
    for (std::uint64_t d : divisors(n)) {
      sum += Natural(euler_phi(c)) * euler_phi(d) * pow2(m * n / lcm(c, d));
    }
  }
  return exact_div(sum, m * n, "count_cyclic");
}

DihedralComponents dihedral_components(GridShape shape) {
  DihedralComponents out;
  out.rotation_num = 0;
  out.row_reflection_num = 0;
  out.col_reflection_num = 0;
  out.full_reflection_num = 0;
  out.denom = 4ull * shape.rows * shape.cols;
  for (unsigned i = 0; i < shape.rows; ++i) {
    for (unsigned j = 0; j < shape.cols; ++j) {
      out.rotation_num += pow2(cycles_rotation(shape, i, j));
      out.row_reflection_num += pow2(cycles_row_reflection(shape, i, j));
      out.col_reflection_num += pow2(cycles_col_reflection(shape, i, j));
      out.full_reflection_num += pow2(cycles_full_reflection(shape, i, j));
    }
  }
  return out;
}

OrbitCount count_dihedral(GridShape shape) {
  DihedralComponents parts = dihedral_components(shape);
  return exact_div(parts.total(), parts.denom, "count_dihedral");
}

OrbitCount burnside_oracle_count(GridShape shape, GroupKind kind) {
  Natural sum = 0;
  for (const GroupElement& g : group_elements(shape, kind)) {
    sum += pow2(cycle_count_oracle(shape, g));
  }
  return exact_div(sum, group_order(shape, kind), "burnside_oracle_count");
}

}  // namespace torbin
