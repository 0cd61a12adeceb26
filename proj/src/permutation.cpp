#include "torbin/permutation.hpp"

#include <bit>
#include <stdexcept>

namespace torbin {

GridShape::GridShape(unsigned m, unsigned n) : rows(m), cols(n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("GridShape: dimensions must be positive");
}

BinaryArray::BinaryArray(GridShape s, std::uint64_t b) : shape(s), bits(b) {
  const unsigned cells = s.cell_count();
  if (cells > kMaxPackedCells)
    throw std::invalid_argument("BinaryArray: shape exceeds 64 cells");
  if (cells < 64 && (b >> cells) != 0)
    throw std::invalid_argument("BinaryArray: bits exceed 2^(m*n)");
}

bool BinaryArray::cell(unsigned r, unsigned c) const {
  if (r >= shape.rows || c >= shape.cols)
    throw std::out_of_range("BinaryArray::cell: cell outside grid");
  const unsigned sig = shape.cell_count() - 1 - (r * shape.cols + c);
  return (bits >> sig) & 1u;
}

unsigned BinaryArray::weight() const {
  return static_cast<unsigned>(std::popcount(bits));
}

std::uint64_t group_order(GridShape shape, GroupKind kind) {
  const std::uint64_t mn = shape.cell_count();
  return kind == GroupKind::Cyclic ? mn : 4 * mn;
}

std::vector<GroupElement> group_elements(GridShape shape, GroupKind kind) {
  static constexpr std::pair<bool, bool> kReflectionBlocks[] = {
      {false, false}, {true, false}, {false, true}, {true, true}};
  const std::size_t blocks = kind == GroupKind::Cyclic ? 1 : 4;

  std::vector<GroupElement> elems;
  elems.reserve(group_order(shape, kind));
  for (std::size_t b = 0; b < blocks; ++b)
    for (unsigned i = 0; i < shape.rows; ++i)
      for (unsigned j = 0; j < shape.cols; ++j)
        elems.push_back({i, j, kReflectionBlocks[b].first, kReflectionBlocks[b].second});
  return elems;
}

std::pair<unsigned, unsigned> cell_map(GridShape shape, const GroupElement& g,
                                       unsigned r, unsigned c) {
  if (r >= shape.rows || c >= shape.cols)
    throw std::out_of_range("cell_map: cell outside grid");
  if (g.row_shift >= shape.rows || g.col_shift >= shape.cols)
    throw std::out_of_range("cell_map: shift exponent outside group");
  const unsigned rr = g.reflect_rows ? shape.rows - 1 - r : r;
  const unsigned cc = g.reflect_cols ? shape.cols - 1 - c : c;
  return {(g.row_shift + rr) % shape.rows, (g.col_shift + cc) % shape.cols};
}

CellPermutation::CellPermutation(GridShape shape, const GroupElement& g)
    : shape_(shape) {
  const unsigned cells = shape.cell_count();
  table_.resize(cells);
  for (unsigned r = 0; r < shape.rows; ++r)
    for (unsigned c = 0; c < shape.cols; ++c) {
      const auto [r2, c2] = cell_map(shape, g, r, c);
      table_[r * shape.cols + c] = r2 * shape.cols + c2;
    }
  if (cells <= kMaxPackedCells) {
    bit_target_.resize(cells);
    for (unsigned idx = 0; idx < cells; ++idx)
      bit_target_[cells - 1 - idx] = static_cast<std::uint8_t>(cells - 1 - table_[idx]);
  }
}

CycleCount CellPermutation::cycle_count() const {
  std::vector<bool> visited(table_.size(), false);
  CycleCount cycles = 0;
  for (unsigned start = 0; start < table_.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (unsigned k = start; !visited[k]; k = table_[k]) visited[k] = true;
  }
  return cycles;
}

std::uint64_t CellPermutation::apply_bits(std::uint64_t bits) const {
  if (bit_target_.empty())
    throw std::logic_error("CellPermutation: shape too large for packed bits");
  std::uint64_t out = 0;
  while (bits != 0) {
    const unsigned pos = static_cast<unsigned>(std::countr_zero(bits));
    bits &= bits - 1;
    out |= std::uint64_t{1} << bit_target_[pos];
  }
  return out;
}

BinaryArray apply(const GroupElement& g, const BinaryArray& x) {
  CellPermutation perm(x.shape, g);
  return BinaryArray(x.shape, perm.apply_bits(x.bits));
}

CycleCount cycle_count_oracle(GridShape shape, const GroupElement& g) {
  return CellPermutation(shape, g).cycle_count();
}

}  // namespace torbin
