#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "covsys/ecs.hpp"

namespace covsys_test {

inline covsys::Ecs mk(std::initializer_list<std::pair<covsys::i64, covsys::i64>> raw) {
    std::vector<covsys::ResidueClass> classes;
    for (const auto& [a, n] : raw) classes.emplace_back(a, n);
    return covsys::Ecs(std::move(classes));
}

// 13-class irreducible fixture: exact, N = 30, six classes at the greatest
// modulus, and no mergeable coset.
inline covsys::Ecs irreducible13() {
    return mk({{2, 6},
               {4, 6},
               {1, 10},
               {3, 10},
               {7, 10},
               {9, 10},
               {0, 15},
               {5, 30},
               {6, 30},
               {12, 30},
               {18, 30},
               {24, 30},
               {25, 30}});
}

} // namespace covsys_test
