// Frozen expected values for the target array {55,54,2;1,1,54}.
// Generated by an independent exact-arithmetic solver (rational Gaussian
// elimination + interval-propagation enumeration); committed as test data.
// Table entries are listed in lexicographic cell order:
// (1,1,1),(1,1,2),(1,1,3),(1,2,1),...,(3,3,3).
#pragma once
#include <array>
#include <cstdint>
#include <vector>

namespace expected {

using Table27 = std::array<std::int64_t, 27>;

// p^h_{ij} for h,i,j in 0..3, flattened h*16 + i*4 + j.
inline const std::array<std::int64_t, 64> target_p_table = {
    1, 0, 0, 0, 0, 55, 0, 0, 0, 0, 2970, 0, 0, 0, 0, 110,
    0, 1, 0, 0, 1, 0, 54, 0, 0, 54, 2808, 108, 0, 0, 108, 2,
    0, 0, 1, 0, 0, 1, 52, 2, 1, 52, 2811, 106, 0, 2, 106, 2,
    0, 0, 0, 1, 0, 0, 54, 1, 0, 54, 2862, 54, 1, 1, 54, 54,
};

// raw family, config (2,1,1): dimension 1, free cells [(3, 3, 3)]
inline const std::vector<Table27> raw_211 = {
    {0, 0, 0, 0, 52, 0, 0, 2, 0, 0, 52, 0, 53, 2650, 108, 0, 106, 0, 0, 2, 0, 0, 106, 0, 0, 0, 2},
    {0, 0, 0, 0, 52, 0, 0, 2, 0, 0, 52, 0, 53, 2651, 107, 0, 105, 1, 0, 2, 0, 0, 105, 1, 0, 1, 1},
    {0, 0, 0, 0, 52, 0, 0, 2, 0, 0, 52, 0, 53, 2652, 106, 0, 104, 2, 0, 2, 0, 0, 104, 2, 0, 2, 0},
};

inline constexpr int raw_223_dim = 6;
inline constexpr int raw_223_count = 53;
inline constexpr int raw_221_dim = 2;
inline constexpr int raw_221_count = 6;
inline constexpr int raw_222_dim = 8;
inline constexpr int raw_222_count = 203;

// free cells of the raw families, canonical (left-to-right pivot) order
inline const std::vector<std::array<int,3>> free_cells_211 = { {3,3,3} };
inline const std::vector<std::array<int,3>> free_cells_223 = { {2,2,3}, {2,3,2}, {2,3,3}, {3,2,3}, {3,3,2}, {3,3,3} };
inline const std::vector<std::array<int,3>> free_cells_221 = { {2,3,3}, {3,3,3} };
inline const std::vector<std::array<int,3>> free_cells_222 = { {2,2,2}, {2,2,3}, {2,3,2}, {2,3,3}, {3,2,2}, {3,2,3}, {3,3,2}, {3,3,3} };

// config (2,2,1) after the coclique rule [333]=0
inline const std::vector<Table27> ruled_221 = {
    {0, 1, 0, 1, 49, 2, 0, 2, 0, 0, 51, 0, 51, 2656, 104, 0, 104, 2, 0, 2, 0, 2, 102, 2, 0, 2, 0},
    {0, 1, 0, 1, 50, 1, 0, 1, 1, 0, 51, 0, 51, 2655, 105, 0, 105, 1, 0, 2, 0, 2, 102, 2, 0, 2, 0},
    {0, 1, 0, 1, 51, 0, 0, 0, 2, 0, 51, 0, 51, 2654, 106, 0, 106, 0, 0, 2, 0, 2, 102, 2, 0, 2, 0},
};

inline constexpr int ruled_223_count = 18;
// attainable ([213],[222]) pairs in the ruled (2,2,3) family
inline const std::vector<std::array<std::int64_t,2>> ruled_223_213_222 = {
    {0,2706}, {0,2707}, {0,2708}, {1,2707}, {1,2708}, {1,2709}
};

// config (2,2,3) after rules + symmetric-representative identification (v<->w)
inline const std::vector<Table27> identified_223 = {
    {0, 0, 1, 0, 51, 1, 1, 1, 0, 0, 52, 0, 52, 2707, 52, 0, 52, 53, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 0, 1, 0, 52, 0, 1, 0, 1, 0, 52, 0, 52, 2706, 53, 0, 53, 52, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 1, 0, 1, 49, 2, 0, 2, 0, 0, 51, 1, 51, 2709, 51, 1, 51, 53, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 1, 0, 1, 49, 2, 0, 2, 0, 0, 52, 0, 52, 2707, 52, 0, 52, 53, 0, 1, 1, 1, 105, 0, 1, 0, 1},
    {0, 1, 0, 1, 50, 1, 0, 1, 1, 0, 51, 1, 51, 2708, 52, 1, 52, 52, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 1, 0, 1, 50, 1, 0, 1, 1, 0, 52, 0, 52, 2706, 53, 0, 53, 52, 0, 1, 1, 1, 105, 0, 1, 0, 1},
};

// config (2,2,3) after rules + identification + the linking value [213]=0
inline const std::vector<Table27> resolved_223 = {
    {0, 0, 1, 0, 51, 1, 1, 1, 0, 0, 52, 0, 52, 2707, 52, 0, 52, 53, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 0, 1, 0, 52, 0, 1, 0, 1, 0, 52, 0, 52, 2706, 53, 0, 53, 52, 0, 2, 0, 2, 103, 1, 0, 1, 1},
    {0, 1, 0, 1, 49, 2, 0, 2, 0, 0, 52, 0, 52, 2707, 52, 0, 52, 53, 0, 1, 1, 1, 105, 0, 1, 0, 1},
    {0, 1, 0, 1, 50, 1, 0, 1, 1, 0, 52, 0, 52, 2706, 53, 0, 53, 52, 0, 1, 1, 1, 105, 0, 1, 0, 1},
};

// config (2,2,1) after rules + the linking value [233]=0 (unique table)
inline const std::vector<Table27> resolved_221 = {
    {0, 1, 0, 1, 51, 0, 0, 0, 2, 0, 51, 0, 51, 2654, 106, 0, 106, 0, 0, 2, 0, 2, 102, 2, 0, 2, 0},
};

inline constexpr int ruled_222_count = 122;
inline constexpr std::int64_t ruled_222_222_min = 2652;
inline constexpr std::int64_t ruled_222_222_max = 2659;

// config (2,2,2): rules + full identification + extremal [213]=2 -> two branch tables
inline const std::vector<Table27> branch_222 = {
    {0, 1, 0, 1, 49, 2, 0, 2, 0, 1, 49, 2, 49, 2659, 102, 2, 102, 2, 0, 2, 0, 2, 102, 2, 0, 2, 0},
    {1, 0, 0, 0, 50, 2, 0, 2, 0, 0, 50, 2, 50, 2658, 102, 2, 102, 2, 0, 2, 0, 2, 102, 2, 0, 2, 0},
};

inline constexpr std::int64_t edge_count_min = 424844;
inline constexpr std::int64_t edge_count_max = 424950;
inline const char* lambda_bar_min = "2491320/937";
inline const char* lambda_bar_max = "7474066/2811";

// spectrum (eigenvalue, multiplicity), descending
inline const std::vector<std::array<std::int64_t,2>> target_spectrum = {
    {55,1}, {7,1617}, {-1,110}, {-8,1408}
};
// first eigenmatrix P, rows by descending eigenvalue, entries as strings
inline const char* target_P[4][4] = {
    {"1", "55", "2970", "110"},
    {"1", "7", "-6", "-2"},
    {"1", "-1", "-54", "54"},
    {"1", "-8", "9", "-2"},
};
// second eigenmatrix Q = v P^{-1}, entries as strings
inline const char* target_Q[4][4] = {
    {"1", "1617", "110", "1408"},
    {"1", "1029/5", "-2", "-1024/5"},
    {"1", "-49/15", "-2", "64/15"},
    {"1", "-147/5", "54", "-128/5"},
};
// vanishing Krein parameters (h,i,j) with q^h_{ij}=0 -- boundary pattern only
inline const std::vector<std::array<int,3>> target_krein_zeros = {
    {0,0,1}, {0,0,2}, {0,0,3}, {0,1,0}, {0,1,2}, {0,1,3}, {0,2,0}, {0,2,1}, {0,2,3}, {0,3,0}, {0,3,1}, {0,3,2}, {1,0,0}, {1,0,2}, {1,0,3}, {1,2,0}, {1,3,0}, {2,0,0}, {2,0,1}, {2,0,3}, {2,1,0}, {2,3,0}, {3,0,0}, {3,0,1}, {3,0,2}, {3,1,0}, {3,2,0}
};

}  // namespace expected
