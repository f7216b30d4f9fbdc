#pragma once

#include <array>
#include <vector>

#include "upg/types.hpp"

namespace upg {

// 3D-Matching instance: three parts of size n each, plus m triples over
// [0,n)^3. Triples are kept sorted and duplicate-free; the stored order is
// the canonical one and downstream constructions index into it.
struct ThreeDMInstance {
    int n = 0;
    std::vector<std::array<int, 3>> triples;

    int m() const { return static_cast<int>(triples.size()); }

    static ThreeDMInstance checked(int n, std::vector<std::array<int, 3>> triples);
};

}  // namespace upg
