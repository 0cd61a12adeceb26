#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "torbin/counting.hpp"
#include "torbin/orbits.hpp"

using torbin::BinaryArray;
using torbin::GridShape;
using torbin::GroupAction;
using torbin::GroupKind;
using torbin::OrbitRecord;

TEST_CASE("canonical_form fixes all-zeros and normalizes single 1s") {
  const GridShape s33(3, 3);
  for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
    CHECK(torbin::canonical_form(BinaryArray(s33, 0), kind).bits == 0);
    for (unsigned sig = 0; sig < 9; ++sig) {
      CHECK(torbin::canonical_form(
                BinaryArray(s33, std::uint64_t(1) << sig), kind)
                .bits == 1);
    }
  }
}

TEST_CASE("value 12 stays distinct under rotations but merges to 10 under "
          "reflections") {
  const BinaryArray x(GridShape(3, 3), 12);
  CHECK(torbin::canonical_form(x, GroupKind::Cyclic).bits == 12);
  CHECK(torbin::canonical_form(x, GroupKind::Dihedral).bits == 10);
  CHECK(torbin::project(x, GroupKind::Cyclic) == 12);
  CHECK(torbin::project(x, GroupKind::Dihedral) == 10);
}

TEST_CASE("canonical_form is idempotent and orbit-constant") {
  std::mt19937_64 rng(20240818);
  for (GridShape shape : {GridShape(3, 3), GridShape(4, 3), GridShape(2, 7)}) {
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t(1) << shape.cell_count()) - 1);
    for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
      const std::vector<torbin::GroupElement> elements =
          torbin::group_elements(shape, kind);
      std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
      for (int trial = 0; trial < 200; ++trial) {
        const BinaryArray x(shape, dist(rng));
        const BinaryArray canon = torbin::canonical_form(x, kind);
        CHECK(torbin::canonical_form(canon, kind) == canon);
        const BinaryArray moved = torbin::apply(elements[pick(rng)], x);
        CHECK(torbin::canonical_form(moved, kind) == canon);
        CHECK(canon.bits <= x.bits);
      }
    }
  }
}

TEST_CASE("enumerate_orbits on 3x3 matches the transcribed listings per weight") {
  const GridShape s33(3, 3);
  for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
    const auto& expected = kind == GroupKind::Cyclic
                               ? fixtures::kReps3x3Cyclic
                               : fixtures::kReps3x3Dihedral;
    const std::vector<OrbitRecord> records =
        torbin::enumerate_orbits(s33, kind);
    std::vector<std::set<std::uint64_t>> by_weight(10);
    for (const OrbitRecord& record : records) {
      REQUIRE(record.weight <= 9);
      by_weight[record.weight].insert(record.representative);
    }
    for (unsigned w = 0; w <= 9; ++w) {
      CAPTURE(w);
      CHECK(by_weight[w] == std::set<std::uint64_t>(expected[w].begin(),
                                                    expected[w].end()));
    }
  }
}

TEST_CASE("enumerate_orbits counts, sizes, and order") {
  const std::vector<OrbitRecord> cyc =
      torbin::enumerate_orbits(GridShape(3, 3), GroupKind::Cyclic);
  const std::vector<OrbitRecord> dih =
      torbin::enumerate_orbits(GridShape(3, 3), GroupKind::Dihedral);
  CHECK(cyc.size() == 64);
  CHECK(dih.size() == 36);
  CHECK(cyc.front() == OrbitRecord{0, 1, 0});

  const std::vector<OrbitRecord> tiny =
      torbin::enumerate_orbits(GridShape(1, 1), GroupKind::Dihedral);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0] == OrbitRecord{0, 1, 0});
  CHECK(tiny[1] == OrbitRecord{1, 1, 1});

  const std::pair<const std::vector<OrbitRecord>*, unsigned> cases[] = {
      {&cyc, 9}, {&dih, 36}};
  for (const auto& [records, order] : cases) {
    std::uint64_t covered = 0;
    for (std::size_t k = 0; k < records->size(); ++k) {
      const OrbitRecord& record = (*records)[k];
      covered += record.orbit_size;
      CHECK(order % record.orbit_size == 0);
      if (k > 0) {
        const OrbitRecord& prev = (*records)[k - 1];
        CHECK((prev.weight < record.weight ||
               (prev.weight == record.weight &&
                prev.representative < record.representative)));
      }
    }
    CHECK(covered == 512);
  }
}

TEST_CASE("enumeration cap is enforced with a named limit") {
  bool thrown = false;
  try {
    torbin::enumerate_orbits(GridShape(5, 5), GroupKind::Cyclic, 24);
  } catch (const std::invalid_argument& e) {
    thrown = true;
    CHECK(std::string(e.what()).find("state space too large") !=
          std::string::npos);
    CHECK(std::string(e.what()).find("cap is 24") != std::string::npos);
  }
  CHECK(thrown);
  CHECK_THROWS_AS(
      torbin::enumerate_orbits_serial(GridShape(5, 5), GroupKind::Cyclic, 24),
      std::invalid_argument);
  // the cap is a knob: tightening it rejects a shape the default admits,
  // loosening it admits the shape again
  CHECK_THROWS_AS(
      torbin::enumerate_orbits(GridShape(3, 3), GroupKind::Cyclic, 8),
      std::invalid_argument);
  CHECK(torbin::enumerate_orbits(GridShape(3, 3), GroupKind::Cyclic, 9)
            .size() == 64);
}

TEST_CASE("parallel scan and serial sweep produce identical records") {
  for (unsigned m = 1; m <= 14; ++m) {
    for (unsigned n = 1; m * n <= 14; ++n) {
      const GridShape shape(m, n);
      for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(torbin::enumerate_orbits(shape, kind) ==
              torbin::enumerate_orbits_serial(shape, kind));
      }
    }
  }
}

TEST_CASE("record counts match the closed forms and cover the state space") {
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned n = 1; m * n <= 12; ++n) {
      const GridShape shape(m, n);
      for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
        const std::vector<OrbitRecord> records =
            torbin::enumerate_orbits(shape, kind);
        const torbin::Natural closed =
            kind == GroupKind::Cyclic ? torbin::count_cyclic(shape)
                                      : torbin::count_dihedral(shape);
        CHECK(torbin::Natural(records.size()) == closed);
        std::uint64_t covered = 0;
        const unsigned order = torbin::group_order(shape, kind);
        for (const OrbitRecord& record : records) {
          covered += record.orbit_size;
          CHECK(order % record.orbit_size == 0);
        }
        CHECK(covered == std::uint64_t(1) << shape.cell_count());
      }
    }
  }
}

TEST_CASE("project sends all 512 states of the 3x3 grid onto the 36 "
          "dihedral identifiers") {
  const GridShape s33(3, 3);
  std::set<std::uint64_t> identifiers;
  GroupAction action(s33, GroupKind::Dihedral);
  for (std::uint64_t x = 0; x < 512; ++x) {
    identifiers.insert(action.canonical(x));
  }
  CHECK(identifiers.size() == 36);

  std::set<std::uint64_t> expected;
  for (const OrbitRecord& record :
       torbin::enumerate_orbits(s33, GroupKind::Dihedral)) {
    expected.insert(record.representative);
  }
  CHECK(identifiers == expected);

  CHECK(torbin::project(BinaryArray(s33, 511), GroupKind::Cyclic) == 511);
  CHECK(torbin::project(BinaryArray(s33, 511), GroupKind::Dihedral) == 511);
}

TEST_CASE("weight_histogram blocks are complete and symmetric") {
  const auto hist =
      torbin::weight_histogram(GridShape(3, 3), GroupKind::Dihedral);
  REQUIRE(hist.size() == 10);
  CHECK(hist.front() == std::pair<unsigned, std::uint64_t>(0, 1));
  CHECK(hist.back() == std::pair<unsigned, std::uint64_t>(9, 1));
  std::uint64_t total = 0;
  for (const auto& [weight, orbits] : hist) {
    total += orbits;
    CHECK(orbits == hist[9 - weight].second);
  }
  CHECK(total == 36);

  const auto cyc = torbin::weight_histogram(GridShape(3, 3), GroupKind::Cyclic);
  std::uint64_t cyc_total = 0;
  for (const auto& [weight, orbits] : cyc) cyc_total += orbits;
  CHECK(cyc_total == 64);
}

TEST_CASE("GroupAction minimality agrees with canonical") {
  std::mt19937_64 rng(5150);
  const GridShape shape(4, 4);
  for (GroupKind kind : {GroupKind::Cyclic, GroupKind::Dihedral}) {
    const GroupAction action(shape, kind);
    std::uniform_int_distribution<std::uint64_t> dist(0, (1u << 16) - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const std::uint64_t x = dist(rng);
      unsigned stabilizer = 0;
      const bool minimal = action.is_minimal(x, &stabilizer);
      CHECK(minimal == (action.canonical(x) == x));
      if (minimal) {
        CHECK(stabilizer >= 1);
        CHECK(action.size() % stabilizer == 0);
      }
    }
  }
}
