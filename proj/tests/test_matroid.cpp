#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/matroid.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace matroid_xf;
using namespace matroid_xf::testing;

namespace {

std::vector<std::vector<int>> element_lists(const std::vector<Basis>& bases) {
    std::vector<std::vector<int>> out;
    for (const auto& b : bases) out.push_back(b.elements());
    return out;
}

std::set<std::uint64_t> masks(const std::vector<Basis>& bases) {
    std::set<std::uint64_t> out;
    for (const auto& b : bases) out.insert(b.set().mask());
    return out;
}

}  // namespace

TEST_CASE("rank examples") {
    CHECK(Matroid::uniform(2, 4).rank(Subset{0, 1, 2}) == 2);
    const auto k4 = k_n(4);
    CHECK(k4.rank(Subset{k4_edge(1, 2), k4_edge(2, 3), k4_edge(1, 3)}) == 2);
    for (const auto& [name, m] : suite()) CHECK(m.rank(Subset{}) == 0);
}

TEST_CASE("rank rejects elements outside the ground set") {
    const auto m = Matroid::uniform(2, 4);
    CHECK_THROWS_AS(m.rank(Subset{4}), InvalidInput);
    CHECK_THROWS_AS(m.rank(Subset{0, 9}), InvalidInput);
}

TEST_CASE("graphic rank agrees with a DFS forest count") {
    const Graph g{5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 1}}};
    const auto m = Matroid::graphic(g);
    for (Subset s : oracle::all_subsets(m.size())) CHECK(m.rank(s) == oracle::forest_rank(g, s));
}

TEST_CASE("constructors reject loops and degenerate input") {
    CHECK_THROWS_AS(Matroid::graphic(Graph{2, {{0, 0}}}), InvalidInput);
    CHECK_THROWS_AS(Matroid::graphic(Graph{2, {{0, 2}}}), InvalidInput);
    CHECK_THROWS_AS(Matroid::binary({{1, 0}, {1, 0}, {0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Matroid::binary({{1, 2}}), InvalidInput);
    CHECK_THROWS_AS(Matroid::uniform(0, 3), InvalidInput);
    CHECK_THROWS_AS(Matroid::uniform(4, 3), InvalidInput);
    CHECK_THROWS_AS(Matroid::from_bases(3, {{0, 1}}), InvalidInput);  // element 2 is a loop
    CHECK_THROWS_AS(Matroid::from_bases(3, {{0, 1}, {2}}), InvalidInput);
    // {0,1} and {2,3} without the cross pairs violates exchange.
    CHECK_THROWS_AS(Matroid::from_bases(4, {{0, 1}, {2, 3}}), InvalidInput);
    // U(2,2) has coloops, so its dual has loops.
    CHECK_THROWS_AS(dual(Matroid::uniform(2, 2)), InvalidInput);
    // Parallel elements are fine.
    CHECK_NOTHROW(Matroid::graphic(Graph{2, {{0, 1}, {1, 0}}}));
}

TEST_CASE("closure examples") {
    CHECK(closure(Matroid::uniform(1, 3), Subset{0}) == Subset{0, 1, 2});
    CHECK(closure(Matroid::uniform(2, 4), Subset{0}) == Subset{0});
    for (const auto& [name, m] : suite()) {
        CHECK(closure(m, m.ground()) == m.ground());
        CHECK(is_flat(m, closure(m, Subset{0})));
    }
}

TEST_CASE("enumerate_bases examples") {
    CHECK(element_lists(enumerate_bases(Matroid::uniform(2, 3))) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(enumerate_bases(Matroid::uniform(2, 4)).size() == 6);
    CHECK(enumerate_bases(k_n(4)).size() == 16);
    for (int n = 3; n <= 6; ++n) {
        const auto g = Graph::complete(n);
        CHECK(static_cast<long long>(enumerate_bases(Matroid::graphic(g)).size()) == oracle::spanning_tree_count(g));
    }
}

TEST_CASE("enumerate_bases is lexicographic and complete") {
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto bases = enumerate_bases(m);
        CHECK(std::is_sorted(bases.begin(), bases.end()));
        std::size_t brute = 0;
        for (Subset s : oracle::all_subsets(m.size()))
            if (s.size() == m.rank() && m.rank(s) == m.rank()) ++brute;
        CHECK(bases.size() == brute);
    }
}

TEST_CASE("enumeration caps raise ResourceLimit") {
    EnumerationCaps caps;
    caps.max_ground = 5;
    CHECK_THROWS_AS(enumerate_bases(k_n(4), caps), ResourceLimit);
    CHECK_THROWS_AS(enumerate_flats(k_n(4), caps), ResourceLimit);
    caps = {};
    caps.max_bases = 10;
    CHECK_THROWS_AS(enumerate_bases(k_n(4), caps), ResourceLimit);
    CHECK_NOTHROW(enumerate_bases(Matroid::uniform(2, 4), caps));
}

TEST_CASE("caps parse from the environment syntax") {
    const auto caps = EnumerationCaps::parse("ground=30,bases=7,cover=9");
    CHECK(caps.max_ground == 30);
    CHECK(caps.max_bases == 7);
    CHECK(caps.max_cover_columns == 9);
    CHECK_THROWS_AS(EnumerationCaps::parse("ground"), InvalidInput);
    CHECK_THROWS_AS(EnumerationCaps::parse("speed=3"), InvalidInput);
    CHECK_THROWS_AS(EnumerationCaps::parse("bases=lots"), InvalidInput);
}

TEST_CASE("enumerate_flats examples") {
    CHECK(enumerate_flats(Matroid::uniform(1, 3)) == std::vector<Subset>{Subset{}, Subset{0, 1, 2}});
    CHECK(enumerate_flats(Matroid::uniform(2, 3)) ==
          std::vector<Subset>{Subset{}, Subset{0}, Subset{1}, Subset{2}, Subset{0, 1, 2}});
    const auto flats = enumerate_flats(k_n(4));
    for (int e = 0; e < 6; ++e) CHECK(std::find(flats.begin(), flats.end(), Subset::singleton(e)) != flats.end());
    const Subset triangle{k4_edge(2, 3), k4_edge(2, 4), k4_edge(3, 4)};
    CHECK(std::find(flats.begin(), flats.end(), triangle) != flats.end());
}

TEST_CASE("enumerate_flats matches the definition over all subsets") {
    for (const auto& [name, m] : small_suite()) {
        INFO(name);
        auto ours = enumerate_flats(m);
        auto brute = oracle::flats_by_definition(m);
        auto by_mask = [](Subset a, Subset b) { return a.mask() < b.mask(); };
        std::sort(ours.begin(), ours.end(), by_mask);
        std::sort(brute.begin(), brute.end(), by_mask);
        CHECK(ours == brute);
    }
}

TEST_CASE("connectivity examples") {
    CHECK(is_connected(Matroid::uniform(2, 4)));
    CHECK_FALSE(is_connected(direct_sum(Matroid::uniform(1, 2), Matroid::uniform(1, 2))));
    CHECK(is_connected(k_n(4)));
    CHECK(is_connected(fano()));
    const auto parts = connected_components(direct_sum(k_n(3), Matroid::uniform(2, 3)));
    CHECK(parts == std::vector<Subset>{Subset{0, 1, 2}, Subset{3, 4, 5}});
    // A path graph: every edge is a coloop and its own component.
    CHECK(connected_components(Matroid::graphic(Graph{3, {{0, 1}, {1, 2}}})).size() == 2);
}

TEST_CASE("connectivity matches the pairwise common-circuit definition") {
    for (const auto& [name, m] : small_suite()) {
        INFO(name);
        const auto circuits = enumerate_circuits(m);
        bool all_pairs = true;
        for (int a = 0; a < m.size(); ++a)
            for (int b = a + 1; b < m.size(); ++b)
                all_pairs = all_pairs && std::any_of(circuits.begin(), circuits.end(), [&](Subset c) {
                                return c.contains(a) && c.contains(b);
                            });
        CHECK(is_connected(m) == all_pairs);
    }
}

TEST_CASE("dual examples") {
    const auto u24 = Matroid::uniform(2, 4);
    CHECK(enumerate_bases(dual(u24)) == enumerate_bases(u24));
    CHECK(enumerate_bases(dual(Matroid::uniform(1, 3))) == enumerate_bases(Matroid::uniform(2, 3)));
    for (const auto& [name, m] : suite()) {
        INFO(name);
        CHECK(enumerate_bases(dual(dual(m))) == enumerate_bases(m));
        std::set<std::uint64_t> complements;
        for (const auto& b : enumerate_bases(m)) complements.insert((m.ground() - b.set()).mask());
        CHECK(masks(enumerate_bases(dual(m))) == complements);
    }
}

TEST_CASE("direct_sum examples") {
    const auto u12 = Matroid::uniform(1, 2);
    const auto sum = direct_sum(u12, u12);
    CHECK(element_lists(enumerate_bases(sum)) == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(sum.rank() == 2);
    CHECK(enumerate_bases(direct_sum(k_n(3), u12)).size() == 6);
    const auto mixed = direct_sum(k_n(4), Matroid::uniform(2, 3));
    CHECK(mixed.rank() == 3 + 2);
    CHECK(mixed.rank(Subset{0, 1, 6, 7}) == 2 + 2);
}

TEST_CASE("restriction and contraction") {
    const auto u24 = Matroid::uniform(2, 4);
    const auto restricted = restriction(u24, Subset{0, 1, 2});
    CHECK(restricted.elements == std::vector<int>{0, 1, 2});
    CHECK(enumerate_bases(restricted.matroid) == enumerate_bases(Matroid::uniform(2, 3)));
    const auto contracted = contraction(u24, Subset{0});
    CHECK(contracted.elements == std::vector<int>{1, 2, 3});
    CHECK(enumerate_bases(contracted.matroid) == enumerate_bases(Matroid::uniform(1, 3)));
    for (const auto& [name, m] : suite()) {
        INFO(name);
        CHECK(enumerate_bases(restriction(m, m.ground()).matroid) == enumerate_bases(m));
    }
    // Contracting a non-flat creates loops; allowed for minors.
    const auto with_loop = contraction(k_n(4), Subset{k4_edge(1, 2), k4_edge(2, 3)});
    CHECK(with_loop.matroid.rank(Subset{0}) == 0);
}

TEST_CASE("rank axioms hold exhaustively on small matroids") {
    for (const auto& [name, m] : small_suite()) {
        INFO(name);
        const auto subsets = oracle::all_subsets(m.size());
        for (int e = 0; e < m.size(); ++e) CHECK(m.rank(Subset::singleton(e)) == 1);
        for (Subset a : subsets) {
            const int ra = m.rank(a);
            REQUIRE(ra >= 0);
            REQUIRE(ra <= std::min(a.size(), m.rank()));
            for (Subset b : subsets) {
                const int rb = m.rank(b);
                if (a.is_subset_of(b)) REQUIRE((ra <= rb && rb <= ra + (b - a).size()));
                REQUIRE(ra + rb >= m.rank(a | b) + m.rank(a & b));
            }
        }
    }
}

TEST_CASE("basis exchange axiom holds on enumerated bases") {
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto bases = enumerate_bases(m);
        const auto all = masks(bases);
        for (const auto& b1 : bases)
            for (const auto& b2 : bases)
                for (int x : (b1.set() - b2.set()).elements()) {
                    const auto options = (b2.set() - b1.set()).elements();
                    REQUIRE(std::any_of(options.begin(), options.end(), [&](int y) {
                        return all.contains(b1.set().without(x).with(y).mask());
                    }));
                }
    }
}

TEST_CASE("random explicit-basis matroids reproduce their source") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        // Random binary matrices give random binary matroids; round-trip via bases.
        std::uniform_int_distribution<int> bit(0, 1);
        std::vector<std::vector<int>> rows(3, std::vector<int>(6));
        for (auto& row : rows)
            for (auto& x : row) x = bit(rng);
        for (int j = 0; j < 6; ++j) rows[static_cast<std::size_t>(j % 3)][static_cast<std::size_t>(j)] = 1;
        const auto m = Matroid::binary(rows);
        std::vector<std::vector<int>> lists = element_lists(enumerate_bases(m));
        const auto copy = Matroid::from_bases(6, lists);
        for (Subset s : oracle::all_subsets(6)) REQUIRE(copy.rank(s) == m.rank(s));
    }
}
