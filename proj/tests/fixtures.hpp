#pragma once

// Golden arrays used by the unit and acceptance suites. Each fixture is a
// literal grid with its declared (K, f, Z, S) and, when regular, the gain.

#include <optional>
#include <string>
#include <vector>

#include "pdalift/pda.hpp"

namespace fixtures {

struct Golden {
    std::string name;
    std::string grid;
    long long users, rows, stars, symbols;
    std::optional<long long> gain;
};

inline const std::vector<Golden>& golden_set() {
    static const std::vector<Golden> g = {
        {"antidiag3_465", "4 6 *; 5 * 6; * 5 4", 3, 3, 1, 3, 2},
        {"antidiag3_645", "6 4 *; 5 * 4; * 5 6", 3, 3, 1, 3, 2},
        {"diag3_321", "* 3 2; 3 * 1; 2 1 *", 3, 3, 1, 3, 2},
        {"identity3", "1 * *; * 1 *; * * 1", 3, 3, 2, 1, 3},
        {"anti_identity3", "* * 0; * 0 *; 0 * *", 3, 3, 2, 1, 3},
        {"dense3", "0 1 2; 3 4 5; 6 7 8", 3, 3, 0, 9, 1},

        {"basic_lift_gain3",
         "0 * * 1 * * 2 * *;"
         "* 0 * * 1 * * 2 *;"
         "* * 0 * * 1 * * 2;"
         "3 * * 4 * * 5 * *;"
         "* 3 * * 4 * * 5 *;"
         "* * 3 * * 4 * * 5;"
         "6 * * 7 * * 8 * *;"
         "* 6 * * 7 * * 8 *;"
         "* * 6 * * 7 * * 8",
         9, 9, 6, 9, 3},
        {"basic_lift_gain4",
         "* * * 0 1 * * 3 4;"
         "* * * 2 * 1 3 * 5;"
         "* * * * 2 0 4 5 *;"
         "0 1 * * * * 6 7 *;"
         "2 * 1 * * * 8 * 7;"
         "* 2 0 * * * * 8 6;"
         "* 3 4 6 7 * * * *;"
         "3 * 5 8 * 7 * * *;"
         "4 5 * * 8 6 * * *",
         9, 9, 5, 9, 4},

        // Rotated dense members of the 3x3 rotation family.
        {"rotation3_a", "0 1 2; 3 4 5; 6 7 8", 3, 3, 0, 9, 1},
        {"rotation3_b", "8 1 2; 3 0 5; 6 7 4", 3, 3, 0, 9, 1},
        {"rotation3_c", "4 1 2; 3 8 5; 6 7 0", 3, 3, 0, 9, 1},

        // Block-rotated pair over the 4x4 anti-diagonal 2-PDA.
        {"block_rotation4_a", "0 1 2 *; 3 4 * 2; 5 * 4 1; * 5 3 0", 4, 4, 1, 6, 2},
        {"block_rotation4_b", "4 1 2 *; 3 0 * 2; 5 * 0 1; * 5 3 4", 4, 4, 1, 6, 2},

        // Transpose pair reference (stars on the diagonal) and its lift.
        {"transpose_ref3", "* 9 10; 9 * 11; 10 11 *", 3, 3, 1, 3, 2},
        {"transpose_lift6",
         "6 7 8 * 0 1;"
         "9 10 11 0 * 2;"
         "12 13 14 1 2 *;"
         "* 3 4 6 9 12;"
         "3 * 5 7 10 13;"
         "4 5 * 8 11 14",
         6, 6, 1, 15, 2},

        // 10x5 constituent pair and its two-identity-block reference.
        {"pair10x5_a",
         "0 * * 1 6; 2 1 * * 7; * 5 2 * 3; * 4 9 3 *; * * 0 5 4;"
         "* * 1 * 8; 9 * * 7 *; 3 8 * * *; 4 * 6 * *; * 0 * 2 *",
         5, 10, 5, 10, std::nullopt},
        {"pair10x5_b",
         "* * * 1 6; 2 * * * 7; * 5 * * 3; * 4 9 * *; * * 0 5 *;"
         "5 * 1 * 8; 9 6 * 7 *; 3 8 7 * *; 4 * 6 8 *; * 0 * 2 9",
         5, 10, 5, 10, std::nullopt},
        {"pair10x5_ref",
         "10 * * * *; * 10 * * *; * * 10 * *; * * * 10 *; * * * * 10;"
         "11 * * * *; * 11 * * *; * * 11 * *; * * * 11 *; * * * * 11",
         5, 10, 8, 2, 5},

        // 12x3 constituent pair: a dense block plus banded 2-occurrence
        // blocks, and the four-identity-block reference.
        {"pair12x3_a",
         "0 1 2; 3 4 5; 6 7 8;"
         "* 17 13; 17 * 9; 13 9 *;"
         "14 10 *; * 15 14; 15 * 10;"
         "16 * 11; 12 11 *; * 16 12",
         3, 12, 3, 18, std::nullopt},
        {"pair12x3_b",
         "9 10 11; 12 13 14; 15 16 17;"
         "* 8 4; 8 * 0; 4 0 *;"
         "5 1 *; * 6 5; 6 * 1;"
         "7 * 2; 3 2 *; * 7 3",
         3, 12, 3, 18, std::nullopt},
        {"pair12x3_ref",
         "18 * *; * 18 *; * * 18;"
         "19 * *; * 19 *; * * 19;"
         "20 * *; * 20 *; * * 20;"
         "21 * *; * 21 *; * * 21",
         3, 12, 8, 4, 3},

        // Block-wise family worked examples on 8x8 and 6x6 seeds.
        {"bw1_example_a",
         "* 0 1 2 3 4 5 6;"
         "0 * 7 8 9 10 11 12;"
         "1 7 * 13 14 15 16 17;"
         "2 8 13 * 18 19 20 21;"
         "3 9 14 18 * 22 23 24;"
         "4 10 15 19 22 * 25 26;"
         "5 11 16 20 23 25 * 27;"
         "6 12 17 21 24 26 27 *",
         8, 8, 1, 28, 2},
        {"bw1_example_b",
         "* 0 1 7 3 4 5 15;"
         "0 * 2 8 9 10 18 12;"
         "1 2 * 13 14 6 16 17;"
         "7 8 13 * 11 19 20 21;"
         "3 9 14 11 * 22 23 25;"
         "4 10 6 19 22 * 24 26;"
         "5 18 16 20 23 24 * 27;"
         "15 12 17 21 25 26 27 *",
         8, 8, 1, 28, 2},
        {"bw1_example_ref",
         "* * * 28 * * * 29;"
         "* * 28 * * * 29 *;"
         "* 28 * * * 29 * *;"
         "28 * * * 29 * * *;"
         "* * * 30 * * * 31;"
         "* * 30 * * * 31 *;"
         "* 30 * * * 31 * *;"
         "30 * * * 31 * * *",
         8, 8, 6, 4, 4},
        {"bw2_example_b",
         "* 22 23 25 3 4 5 15;"
         "22 * 24 26 9 10 18 12;"
         "23 24 * 27 14 6 16 17;"
         "25 26 27 * 11 19 20 21;"
         "3 9 14 11 * 0 1 7;"
         "4 10 6 19 0 * 2 8;"
         "5 18 16 20 1 2 * 13;"
         "15 12 17 21 7 8 13 *",
         8, 8, 1, 28, 2},
        {"bw2_example_ref",
         "* 30 * 32 * * * 28;"
         "30 * 32 * * * 28 *;"
         "* 31 * 33 * 28 * *;"
         "31 * 33 * 28 * * *;"
         "* * * 29 * 30 * 31;"
         "* * 29 * 30 * 31 *;"
         "* 29 * * * 32 * 33;"
         "29 * * * 32 * 33 *",
         8, 8, 5, 6, 4},
        {"bw3_example_ref",
         "* 0 1 * * *; 0 * 2 * * *; 1 2 * * * *;"
         "* * * * 0 1; * * * 0 * 2; * * * 1 2 *",
         6, 6, 4, 3, 4},
        {"bw3_example_a",
         "* 0 1 2 3 4;"
         "0 * 5 6 7 8;"
         "1 5 * 9 10 11;"
         "2 6 9 * 12 13;"
         "3 7 10 12 * 14;"
         "4 8 11 13 14 *",
         6, 6, 1, 15, 2},
        {"bw3_example_b",
         "* 12 13 2 3 4;"
         "12 * 14 6 7 8;"
         "13 14 * 9 10 11;"
         "2 6 9 * 0 1;"
         "3 7 10 0 * 5;"
         "4 8 11 1 5 *",
         6, 6, 1, 15, 2},
        {"bw4_example_ref",
         "* 4 3 6 * * * 0;"
         "4 * 2 5 * * 0 *;"
         "3 2 * 7 * 0 * *;"
         "6 5 7 * 0 * * *;"
         "* * * 1 * 4 3 2;"
         "* * 1 * 4 * 6 5;"
         "* 1 * * 3 6 * 7;"
         "1 * * * 2 5 7 *",
         8, 8, 4, 8, 4},
        {"bw4_example_a",
         "0 1 2 3 16 17 18 19;"
         "4 5 6 7 20 21 22 23;"
         "8 9 10 11 24 25 26 27;"
         "12 13 14 15 28 29 30 31;"
         "32 33 34 35 48 49 50 51;"
         "36 37 38 39 52 53 54 55;"
         "40 41 42 43 56 57 58 59;"
         "44 45 46 47 60 61 62 63",
         8, 8, 0, 64, 1},
        {"bw4_example_at",
         "0 4 8 12 16 17 18 22;"
         "1 5 9 13 20 21 25 23;"
         "2 6 10 14 24 28 26 27;"
         "3 7 11 15 19 29 30 31;"
         "32 33 34 38 48 52 56 60;"
         "36 37 41 39 49 53 57 61;"
         "40 44 42 43 50 54 58 62;"
         "35 45 46 47 51 55 59 63",
         8, 8, 0, 64, 1},
        {"bw4_example_b",
         "48 49 50 57 16 17 18 25;"
         "52 53 60 55 20 21 28 23;"
         "56 51 58 59 24 19 26 27;"
         "54 61 62 63 22 29 30 31;"
         "32 33 34 41 0 1 2 9;"
         "36 37 44 39 4 5 12 7;"
         "40 35 42 43 8 3 10 11;"
         "38 45 46 47 6 13 14 15",
         8, 8, 0, 64, 1},
        {"bw4_example_bt",
         "48 52 56 54 16 17 18 28;"
         "49 53 51 61 20 21 19 23;"
         "50 60 58 62 24 22 26 27;"
         "57 55 59 63 25 29 30 31;"
         "32 33 34 44 0 4 8 6;"
         "36 37 35 39 1 5 3 13;"
         "40 38 42 43 2 12 10 14;"
         "41 45 46 47 9 7 11 15",
         8, 8, 0, 64, 1},

        // Identity-block tilings on six columns: three members sharing nine
        // symbols, and four members in two replication groups.
        {"tiling63_a",
         "0 * 1 * 2 *; * 0 * 1 * 2; 3 * 4 * 5 *;"
         "* 3 * 4 * 5; 6 * 7 * 8 *; * 6 * 7 * 8",
         6, 6, 3, 9, 2},
        {"tiling63_b",
         "8 * 1 * 2 *; * 8 * 1 * 2; 3 * 0 * 5 *;"
         "* 3 * 0 * 5; 6 * 7 * 4 *; * 6 * 7 * 4",
         6, 6, 3, 9, 2},
        {"tiling63_c",
         "4 * 1 * 2 *; * 4 * 1 * 2; 3 * 8 * 5 *;"
         "* 3 * 8 * 5; 6 * 7 * 0 *; * 6 * 7 * 0",
         6, 6, 3, 9, 2},
        {"tiling64_a",
         "0 * * 1 * *; * 0 * * 1 *; * * 0 * * 1;"
         "2 * * 3 * *; * 2 * * 3 *; * * 2 * * 3",
         6, 6, 4, 4, 3},
        {"tiling64_b",
         "3 * * 1 * *; * 3 * * 1 *; * * 3 * * 1;"
         "2 * * 0 * *; * 2 * * 0 *; * * 2 * * 0",
         6, 6, 4, 4, 3},
        {"tiling64_c",
         "4 * * 5 * *; * 4 * * 5 *; * * 4 * * 5;"
         "6 * * 7 * *; * 6 * * 7 *; * * 6 * * 7",
         6, 6, 4, 4, 3},
        {"tiling64_d",
         "7 * * 5 * *; * 7 * * 5 *; * * 7 * * 5;"
         "6 * * 4 * *; * 6 * * 4 *; * * 6 * * 4",
         6, 6, 4, 4, 3},

        // A pair whose members are valid but not individually regular.
        {"mixed3_a", "* 0 2; 0 * 1; 3 1 *", 3, 3, 1, 4, std::nullopt},
        {"mixed3_b", "1 2 *; 3 * 2; * 3 0", 3, 3, 1, 4, std::nullopt},
    };
    return g;
}

inline pdalift::PdaArray grid(const std::string& name) {
    for (const auto& f : golden_set())
        if (f.name == name) return pdalift::parse_grid(f.grid);
    throw std::runtime_error("no fixture named " + name);
}

}  // namespace fixtures
