#pragma once

// Hand-transcribed reference data: the full 3x3 orbit-representative listings
// (both groups, grouped by weight) and the 8x8 count tables for both groups.

#include <cstdint>
#include <vector>

namespace fixtures {

// 3x3 cyclic orbit representatives by weight, 64 in total.
inline const std::vector<std::vector<std::uint64_t>> kReps3x3Cyclic = {
    {0},
    {1},
    {3, 9, 10, 12},
    {7, 11, 13, 14, 25, 26, 28, 73, 74, 76, 84, 98},
    {15, 27, 29, 30, 57, 75, 77, 78, 83, 85, 86, 90, 99, 102},
    {31, 59, 79, 87, 91, 93, 94, 103, 107, 109, 110, 115, 117, 118},
    {63, 95, 111, 119, 123, 125, 126, 219, 221, 222, 238, 245},
    {127, 223, 239, 247},
    {255},
    {511},
};

// 3x3 dihedral orbit representatives by weight, 36 in total.
inline const std::vector<std::vector<std::uint64_t>> kReps3x3Dihedral = {
    {0},
    {1},
    {3, 9, 10},
    {7, 11, 14, 73, 74, 84},
    {15, 27, 29, 75, 78, 83, 85},
    {31, 79, 87, 91, 93, 94, 118},
    {63, 95, 119, 219, 221, 238},
    {127, 223, 239},
    {255},
    {511},
};

// Counts under rotations only, rows m = 1..8, columns n = 1..8.
inline constexpr std::uint64_t kCyclicTable[8][8] = {
    {2, 3, 4, 6, 8, 14, 20, 36},
    {3, 7, 14, 40, 108, 362, 1182, 4150},
    {4, 14, 64, 352, 2192, 14624, 99880, 699252},
    {6, 40, 352, 4156, 52488, 699600, 9587580, 134223976},
    {8, 108, 2192, 52488, 1342208, 35792568, 981706832, 27487816992},
    {14, 362, 14624, 699600, 35792568, 1908897152, 104715443852,
     5864063066500},
    {20, 1182, 99880, 9587580, 981706832, 104715443852, 11488774559744,
     1286742755471400},
    {36, 4150, 699252, 134223976, 27487816992, 5864063066500,
     1286742755471400, 288230376353050816ull},
};

// Counts under rotations and reflections, rows m = 1..8, columns n = 1..8.
inline constexpr std::uint64_t kDihedralTable[8][8] = {
    {2, 3, 4, 6, 8, 13, 18, 30},
    {3, 7, 13, 34, 78, 237, 687, 2299},
    {4, 13, 36, 158, 708, 4236, 26412, 180070},
    {6, 34, 158, 1459, 14676, 184854, 2445918, 33888844},
    {8, 78, 708, 14676, 340880, 8999762, 245619576, 6873769668},
    {13, 237, 4236, 184854, 8999762, 478070832, 26185264801, 1466114420489},
    {18, 687, 26412, 2445918, 245619576, 26185264801, 2872221202512,
     321686550498774},
    {30, 2299, 180070, 33888844, 6873769668, 1466114420489, 321686550498774,
     72057630729710704ull},
};

}  // namespace fixtures
