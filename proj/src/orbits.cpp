#include "torbin/orbits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torbin {
namespace {

void check_enumeration_cap(GridShape shape, unsigned cap) {
  const unsigned cells = shape.cell_count();
  if (cells > cap || cells >= 64) {
    throw std::invalid_argument(
        "state space too large: " + std::to_string(shape.rows) + "x" +
        std::to_string(shape.cols) + " has 2^" + std::to_string(cells) +
        " states, enumeration cap is " + std::to_string(cap) + " cells");
  }
}

void sort_records(std::vector<OrbitRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              return a.representative < b.representative;
            });
}

}  // namespace

GroupAction::GroupAction(GridShape shape, GroupKind kind)
    : shape_(shape), kind_(kind), cells_(shape.cell_count()) {
  if (cells_ > kMaxPackedCells) {
    throw std::invalid_argument("GroupAction: shape exceeds " +
                                std::to_string(kMaxPackedCells) +
                                " packed cells");
  }
  const std::vector<GroupElement> elements = group_elements(shape, kind);
  element_count_ = elements.size();
  bit_targets_.resize(element_count_ * cells_);
  for (std::size_t e = 0; e < element_count_; ++e) {
    CellPermutation perm(shape, elements[e]);
    for (unsigned pos = 0; pos < cells_; ++pos) {
      bit_targets_[e * cells_ + pos] = perm.bit_target(pos);
    }
  }
}

std::uint64_t GroupAction::apply_element(std::size_t e,
                                         std::uint64_t bits) const {
  const std::uint8_t* targets = bit_targets_.data() + e * cells_;
  std::uint64_t out = 0;
  while (bits != 0) {
    const int pos = std::countr_zero(bits);
    bits &= bits - 1;
    out |= std::uint64_t(1) << targets[pos];
  }
  return out;
}

std::uint64_t GroupAction::canonical(std::uint64_t bits) const {
  std::uint64_t best = bits;
  for (std::size_t e = 0; e < element_count_; ++e) {
    best = std::min(best, apply_element(e, bits));
  }
  return best;
}

bool GroupAction::is_minimal(std::uint64_t bits,
                             unsigned* stabilizer_out) const {
  unsigned stabilizer = 0;
  for (std::size_t e = 0; e < element_count_; ++e) {
    const std::uint64_t image = apply_element(e, bits);
    if (image < bits) return false;
    if (image == bits) ++stabilizer;
  }
  if (stabilizer_out != nullptr) *stabilizer_out = stabilizer;
  return true;
}

BinaryArray canonical_form(const BinaryArray& x, GroupKind kind) {
  GroupAction action(x.shape, kind);
  return BinaryArray(x.shape, action.canonical(x.bits));
}

std::uint64_t project(const BinaryArray& x, GroupKind kind) {
  return canonical_form(x, kind).bits;
}

std::vector<OrbitRecord> enumerate_orbits(GridShape shape, GroupKind kind,
                                          unsigned cap) {
  check_enumeration_cap(shape, cap);
  const GroupAction action(shape, kind);
  const std::uint64_t total = std::uint64_t(1) << shape.cell_count();
  const unsigned order = group_order(shape, kind);

  int bucket_count = 1;
#ifdef _OPENMP
  bucket_count = omp_get_max_threads();
#endif
  std::vector<std::vector<OrbitRecord>> buckets(bucket_count);
  bool bad_stabilizer = false;  // exceptions must not cross the parallel region

#pragma omp parallel for schedule(dynamic, 4096) reduction(|| : bad_stabilizer)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(total); ++x) {
    const std::uint64_t bits = static_cast<std::uint64_t>(x);
    unsigned stabilizer = 0;
    if (!action.is_minimal(bits, &stabilizer)) continue;
    if (order % stabilizer != 0) {
      bad_stabilizer = true;
      continue;
    }
    int bucket = 0;
#ifdef _OPENMP
    bucket = omp_get_thread_num();
#endif
    buckets[bucket].push_back(OrbitRecord{
        bits, order / stabilizer,
        static_cast<unsigned>(std::popcount(bits))});
  }

  if (bad_stabilizer) {
    throw std::logic_error(
        "enumerate_orbits: stabilizer does not divide the group order");
  }
  std::vector<OrbitRecord> records;
  for (const std::vector<OrbitRecord>& bucket : buckets) {
    records.insert(records.end(), bucket.begin(), bucket.end());
  }
  sort_records(records);
  return records;
}

std::vector<OrbitRecord> enumerate_orbits_serial(GridShape shape,
                                                 GroupKind kind,
                                                 unsigned cap) {
  check_enumeration_cap(shape, cap);
  const GroupAction action(shape, kind);
  const std::uint64_t total = std::uint64_t(1) << shape.cell_count();

  std::vector<bool> visited(total, false);
  std::vector<OrbitRecord> records;
  for (std::uint64_t x = 0; x < total; ++x) {
    if (visited[x]) continue;
    // Ascending sweep: the first unvisited element of an orbit is its minimum.
    std::uint32_t orbit_size = 0;
    for (std::size_t e = 0; e < action.size(); ++e) {
      const std::uint64_t image = action.apply_element(e, x);
      if (!visited[image]) {
        visited[image] = true;
        ++orbit_size;
      }
    }
    records.push_back(
        OrbitRecord{x, orbit_size, static_cast<unsigned>(std::popcount(x))});
  }
  sort_records(records);
  return records;
}

std::vector<std::pair<unsigned, std::uint64_t>> weight_histogram(
    GridShape shape, GroupKind kind, unsigned cap) {
  const std::vector<OrbitRecord> records = enumerate_orbits(shape, kind, cap);
  std::vector<std::pair<unsigned, std::uint64_t>> histogram;
  for (unsigned w = 0; w <= shape.cell_count(); ++w) {
    histogram.emplace_back(w, 0);
  }
  for (const OrbitRecord& record : records) {
    ++histogram[record.weight].second;
  }
  return histogram;
}

}  // namespace torbin
