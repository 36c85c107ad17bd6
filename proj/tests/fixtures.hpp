#pragma once

// Betti vectors of h_n frozen from tests/oracle/betti_oracle.py
// (python3 tests/oracle/betti_oracle.py 0:6 2; 0:5 1009 7; 0:5 3).

#include <cstdint>
#include <vector>

namespace fixtures {

inline const std::vector<std::vector<std::uint64_t>> kBettiChar2 = {
    {1, 1},
    {1, 2, 2, 1},
    {1, 4, 5, 5, 4, 1},
    {1, 6, 14, 15, 15, 14, 6, 1},
    {1, 8, 27, 49, 51, 51, 49, 27, 8, 1},
    {1, 10, 44, 111, 176, 186, 186, 176, 111, 44, 10, 1},
    {1, 12, 65, 209, 442, 649, 702, 702, 649, 442, 209, 65, 12, 1},
};

// Same vectors for p = 7 and p = 1009; p = 3 agrees for n <= 4.
inline const std::vector<std::vector<std::uint64_t>> kBettiChar1009 = {
    {1, 1},
    {1, 2, 2, 1},
    {1, 4, 5, 5, 4, 1},
    {1, 6, 14, 14, 14, 14, 6, 1},
    {1, 8, 27, 48, 42, 42, 48, 27, 8, 1},
    {1, 10, 44, 110, 165, 132, 132, 165, 110, 44, 10, 1},
};

// p = 3 departs from the large-prime values at n = 5 (degrees 5 and 6).
inline const std::vector<std::uint64_t> kBettiChar3N5 = {1, 10, 44, 110, 165, 133,
                                                         133, 165, 110, 44, 10, 1};

}  // namespace fixtures
