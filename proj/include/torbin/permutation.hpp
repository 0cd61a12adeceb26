#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace torbin {

// Dimensions of an m-by-n toroidal grid. Both must be positive.
struct GridShape {
  unsigned rows;
  unsigned cols;

  GridShape(unsigned m, unsigned n);

  unsigned cell_count() const { return rows * cols; }
  GridShape transposed() const { return {cols, rows}; }

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// Cell limit for the bit-packed array machinery. The counting formulas have
// no such bound; arrays, canonical forms and orbit sweeps do.
inline constexpr unsigned kMaxPackedCells = 64;

// One binary grid, packed row-major with cell (0,0) at the most significant
// of the m*n bits. The integer value of `bits` therefore equals the
// row-major binary reading of the array, which is also the order canonical
// representatives are minimal in.
struct BinaryArray {
  GridShape shape;
  std::uint64_t bits;

  BinaryArray(GridShape s, std::uint64_t b);

  bool cell(unsigned r, unsigned c) const;
  unsigned weight() const;

  friend bool operator==(const BinaryArray&, const BinaryArray&) = default;
};

// Row/column rotation exponents plus optional row/column reflections.
// Every element of the dihedral product group has this form; cyclic-group
// elements are the ones with both reflections off.
struct GroupElement {
  unsigned row_shift = 0;
  unsigned col_shift = 0;
  bool reflect_rows = false;
  bool reflect_cols = false;
};

enum class GroupKind { Cyclic, Dihedral };

/// Group order: m*n for Cyclic, 4*m*n for Dihedral.
std::uint64_t group_order(GridShape shape, GroupKind kind);

/// Every group element exactly once. Blocks in order: rotations only, row
/// reflection, column reflection, both reflections; row-major shifts within
/// a block. The identity is always first.
std::vector<GroupElement> group_elements(GridShape shape, GroupKind kind);

/// Destination of cell (r, c) under g. Convention: reflections first, then
/// rotations. Rejects out-of-range cells and shifts.
std::pair<unsigned, unsigned> cell_map(GridShape shape, const GroupElement& g,
                                       unsigned r, unsigned c);

// Number of cycles in a cell permutation, fixed points counting as cycles.
using CycleCount = unsigned;

// The permutation a group element induces on the grid cells, materialized
// as an index table. Cycle counting works for any shape; applying to packed
// bits requires cell_count() <= kMaxPackedCells.
class CellPermutation {
 public:
  CellPermutation(GridShape shape, const GroupElement& g);

  unsigned target(unsigned cell_index) const { return table_[cell_index]; }

  /// Bit position the packed bit at `bit_pos` moves to.
  std::uint8_t bit_target(unsigned bit_pos) const { return bit_target_[bit_pos]; }

  CycleCount cycle_count() const;
  std::uint64_t apply_bits(std::uint64_t bits) const;

  const GridShape& shape() const { return shape_; }

 private:
  GridShape shape_;
  std::vector<std::uint32_t> table_;      // cell index -> cell index
  std::vector<std::uint8_t> bit_target_;  // packed shapes only
};

/// The group action on arrays: a bijection of the state space per element.
BinaryArray apply(const GroupElement& g, const BinaryArray& x);

/// Cycle count of g's cell permutation by explicit decomposition with a
/// visited sweep. The independent check for every closed-form cycle count.
CycleCount cycle_count_oracle(GridShape shape, const GroupElement& g);

}  // namespace torbin
