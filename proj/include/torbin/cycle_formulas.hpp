#pragma once

#include "torbin/permutation.hpp"

namespace torbin {

// Closed-form cycle counts for the four reflection blocks of the dihedral
// product group, indexed by the row shift i and column shift j. Each one
// equals cycle_count_oracle on the corresponding group element; the test
// suite sweeps that equivalence exhaustively.

/// Cycles of the pure rotation with shifts (i, j): m*n / lcm(c, d) where
/// c and d are the orders of the row and column rotations.
CycleCount cycles_rotation(GridShape shape, unsigned i, unsigned j);

/// Cycles of rotation (i, j) followed from a row reflection.
CycleCount cycles_row_reflection(GridShape shape, unsigned i, unsigned j);

/// Cycles of rotation (i, j) with a column reflection; equals the
/// row-reflection count on the transposed shape with swapped shifts.
CycleCount cycles_col_reflection(GridShape shape, unsigned i, unsigned j);

/// Cycles of rotation (i, j) with both reflections.
CycleCount cycles_full_reflection(GridShape shape, unsigned i, unsigned j);

}  // namespace torbin
