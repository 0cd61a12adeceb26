#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "torbin/permutation.hpp"

namespace torbin {

// Default bound on m*n for full enumeration: 2^24 states times at most 96
// group elements stays in desk-scale time. A knob, not a hard limit.
inline constexpr unsigned kDefaultEnumerationCap = 24;

// One orbit of the group action, identified by its minimal element.
struct OrbitRecord {
  std::uint64_t representative;  // smallest integer reading in the orbit
  std::uint32_t orbit_size;      // divides the group order
  unsigned weight;               // number of 1 cells, constant on the orbit

  bool operator==(const OrbitRecord&) const = default;
};

// Precomputed bit-permutation tables for every element of C_m x C_n or
// D_m x D_n, so a whole-array action is a few shifts per set bit. Pure and
// thread safe once built.
class GroupAction {
 public:
  GroupAction(GridShape shape, GroupKind kind);

  GridShape shape() const { return shape_; }
  GroupKind kind() const { return kind_; }
  std::size_t size() const { return element_count_; }

  /// Image of the packed array under element index e (order as in
  /// group_elements).
  std::uint64_t apply_element(std::size_t e, std::uint64_t bits) const;

  /// Minimum of apply_element over the whole group.
  std::uint64_t canonical(std::uint64_t bits) const;

  /// True iff no image is smaller than bits itself. When true and
  /// stabilizer_out is non-null, it receives the number of elements
  /// fixing bits.
  bool is_minimal(std::uint64_t bits, unsigned* stabilizer_out) const;

 private:
  GridShape shape_;
  GroupKind kind_;
  unsigned cells_;
  std::size_t element_count_;
  std::vector<std::uint8_t> bit_targets_;  // element-major, cells_ per element
};

/// Minimal element of the orbit of x; idempotent and constant on orbits.
BinaryArray canonical_form(const BinaryArray& x, GroupKind kind);

/// Orbit identifier of x: the representative's integer value.
std::uint64_t project(const BinaryArray& x, GroupKind kind);

/// All orbits of the action on m*n binary arrays, sorted by
/// (weight, representative). Parallel minimality scan: a state is recorded
/// iff it is its orbit's minimum, with the orbit size recovered from the
/// stabilizer. Throws std::invalid_argument when m*n exceeds the cap.
std::vector<OrbitRecord> enumerate_orbits(
    GridShape shape, GroupKind kind, unsigned cap = kDefaultEnumerationCap);

/// Same records as enumerate_orbits, computed by the single-threaded
/// ascending sweep with a visited bitmap. Reference for tests and the
/// benchmark baseline.
std::vector<OrbitRecord> enumerate_orbits_serial(
    GridShape shape, GroupKind kind, unsigned cap = kDefaultEnumerationCap);

/// Orbit count per weight 0..m*n; counts sum to the total orbit count.
std::vector<std::pair<unsigned, std::uint64_t>> weight_histogram(
    GridShape shape, GroupKind kind, unsigned cap = kDefaultEnumerationCap);

}  // namespace torbin
