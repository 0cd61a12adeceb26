#pragma once

#include <cstdint>

#include "torbin/numtheory.hpp"
#include "torbin/permutation.hpp"

namespace torbin {

// Number of orbits of a group action; always between 1 and 2^(m*n).
using OrbitCount = Natural;

// The four reflection-block sums of the dihedral orbit count, kept as exact
// numerators over the common denominator 4*m*n. The blocks are individually
// non-integral (the rotation block alone is a quarter of the cyclic count);
// only their total divides out.
struct DihedralComponents {
  Natural rotation_num;         // sum of 2^cycles over pure rotations
  Natural row_reflection_num;   // ... over row-reflecting elements
  Natural col_reflection_num;   // ... over column-reflecting elements
  Natural full_reflection_num;  // ... over doubly reflecting elements
  std::uint64_t denom;          // 4*m*n

  Natural total() const {
    return rotation_num + row_reflection_num + col_reflection_num +
           full_reflection_num;
  }
};

/// Necklaces with n beads of two colors: (1/n) sum over d|n of phi(d) 2^(n/d).
OrbitCount necklace_count(std::uint64_t n);

/// Bracelets with n beads of two colors (turning over allowed).
OrbitCount bracelet_count(std::uint64_t n);

/// Toroidal m*n binary arrays up to row/column rotation:
/// (1/mn) sum over c|m, d|n of phi(c) phi(d) 2^(mn/lcm(c,d)).
OrbitCount count_cyclic(GridShape shape);

/// The four block sums of the dihedral count, evaluated through the
/// closed-form cycle counts.
DihedralComponents dihedral_components(GridShape shape);

/// Toroidal m*n binary arrays up to row/column rotation and reflection.
OrbitCount count_dihedral(GridShape shape);

/// Orbit count by the raw Burnside average: sum of 2^cycles over the whole
/// group with cycles taken from the decomposition oracle, divided by the
/// group order. Slower route kept independent of every closed form.
OrbitCount burnside_oracle_count(GridShape shape, GroupKind kind);

}  // namespace torbin
