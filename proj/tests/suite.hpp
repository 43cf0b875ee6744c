#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroid_xf/matroid.hpp"

namespace matroid_xf::testing {

inline Matroid k_n(int n) { return Matroid::graphic(Graph::complete(n)); }

inline Matroid fano() {
    return Matroid::binary({{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}});
}

struct Named {
    std::string name;
    Matroid matroid;
};

/// The acceptance suite.
inline std::vector<Named> suite() {
    return {
        {"U(1,3)", Matroid::uniform(1, 3)},
        {"U(2,3)", Matroid::uniform(2, 3)},
        {"U(2,4)", Matroid::uniform(2, 4)},
        {"U(3,5)", Matroid::uniform(3, 5)},
        {"M(K4)", k_n(4)},
        {"M(K5)", k_n(5)},
        {"Fano", fano()},
        {"Fano*", dual(fano())},
        {"M(K3)+U(2,3)", direct_sum(k_n(3), Matroid::uniform(2, 3))},
    };
}

/// Suite members small enough for exhaustive per-subset checks (n <= 8).
inline std::vector<Named> small_suite() {
    std::vector<Named> out;
    for (auto& m : suite())
        if (m.matroid.size() <= 8) out.push_back(std::move(m));
    return out;
}

/// K_4 edges as labelled with vertices 1..4: element 0 = 12, 1 = 13,
/// 2 = 14, 3 = 23, 4 = 24, 5 = 34.
inline int k4_edge(int a, int b) {
    const auto g = Graph::complete(4);
    return *g.edge_index(a - 1, b - 1);
}

inline Basis basis_of(std::initializer_list<int> elements) { return Basis(Subset(elements)); }

}  // namespace matroid_xf::testing
