#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/exchange.hpp"
#include "suite.hpp"

using namespace matroid_xf;
using namespace matroid_xf::testing;

namespace {

int e(int a, int b) { return k4_edge(a, b); }

FlatInequality flat_of(const Matroid& m, Subset s) { return {s, m.rank(s), true}; }

}  // namespace

TEST_CASE("bipartite matching finds a perfect matching when one exists") {
    const auto match = max_bipartite_matching({{0, 1}, {0}, {1, 2}}, 3);
    CHECK(match == std::vector<int>{1, 0, 2});
    const auto partial = max_bipartite_matching({{0}, {0}}, 1);
    CHECK(std::count(partial.begin(), partial.end(), -1) == 1);
}

TEST_CASE("exchange_bijection examples") {
    const auto k4 = k_n(4);
    const auto star = basis_of({e(1, 2), e(1, 3), e(1, 4)});
    const auto path = basis_of({e(1, 2), e(2, 3), e(3, 4)});
    const auto bij = exchange_bijection(k4, star, path);
    CHECK(bij.map == std::vector<int>{e(1, 2), e(2, 3), e(3, 4)});

    for (const auto& [name, m] : suite()) {
        const auto first = enumerate_bases(m).front();
        CHECK(exchange_bijection(m, first, first).map == first.elements());
    }

    const auto u24 = Matroid::uniform(2, 4);
    CHECK(exchange_bijection(u24, basis_of({0, 1}), basis_of({2, 3})).map == std::vector<int>{2, 3});
}

TEST_CASE("exchange_bijection rejects non-bases") {
    const auto k4 = k_n(4);
    const auto cycle = basis_of({e(1, 2), e(1, 3), e(2, 3)});
    const auto star = basis_of({e(1, 2), e(1, 3), e(1, 4)});
    CHECK_THROWS_AS(exchange_bijection(k4, cycle, star), InvalidInput);
    CHECK_THROWS_AS(exchange_bijection(k4, star, cycle), InvalidInput);
    CHECK_THROWS_AS(exchange_bijection(k4, star, basis_of({0, 1})), InvalidInput);
}

TEST_CASE("canonical bijection exists and is valid for every basis pair") {
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto bases = enumerate_bases(m);
        for (const auto& b1 : bases)
            for (const auto& b2 : bases) {
                const auto bij = exchange_bijection(m, b1, b2);
                REQUIRE(is_valid_exchange(m, bij));
                for (int i = 0; i < b1.size(); ++i)
                    if (b2.set().contains(b1[i])) REQUIRE(bij.image(i) == b1[i]);
            }
    }
}

TEST_CASE("is_valid_exchange rejects broken maps") {
    const auto k4 = k_n(4);
    const auto star = basis_of({e(1, 2), e(1, 3), e(1, 4)});
    const auto path = basis_of({e(1, 2), e(2, 3), e(3, 4)});
    // 14 -> 23 gives {12,13,23}, a cycle.
    CHECK_FALSE(is_valid_exchange(k4, {star, path, {e(1, 2), e(3, 4), e(2, 3)}}));
    CHECK_FALSE(is_valid_exchange(k4, {star, path, {e(1, 2), e(2, 3), e(2, 3)}}));
    CHECK_FALSE(is_valid_exchange(k4, {star, path, {e(1, 2), e(2, 3)}}));
}

TEST_CASE("all_exchange_bijections enumerates every valid map") {
    const auto u24 = Matroid::uniform(2, 4);
    const auto all = all_exchange_bijections(u24, basis_of({0, 1}), basis_of({2, 3}));
    CHECK(all.size() == 2);
    for (const auto& bij : all) CHECK(is_valid_exchange(u24, bij));

    // In K4 the star-to-path exchange is forced apart from the intersection.
    const auto k4 = k_n(4);
    const auto forced = all_exchange_bijections(k4, basis_of({e(1, 2), e(1, 3), e(1, 4)}),
                                                basis_of({e(1, 2), e(2, 3), e(3, 4)}));
    std::set<std::vector<int>> maps;
    for (const auto& bij : forced) maps.insert(bij.map);
    CHECK(maps.contains({e(1, 2), e(2, 3), e(3, 4)}));
    CHECK(maps.size() == forced.size());
}

TEST_CASE("slack_by_ordering examples") {
    const auto k4 = k_n(4);
    const auto single = flat_of(k4, Subset{e(3, 4)});
    const auto source = basis_of({e(1, 3), e(2, 3), e(3, 4)});
    const auto star = basis_of({e(1, 2), e(1, 3), e(1, 4)});
    const auto bij = exchange_bijection(k4, source, star);
    CHECK(bij.map == std::vector<int>{e(1, 3), e(1, 2), e(1, 4)});
    CHECK(slack_by_ordering(single, bij) == 1);

    CHECK(slack_by_ordering(single, exchange_bijection(k4, source, source)) == 0);

    const auto triangle = flat_of(k4, Subset{e(2, 3), e(2, 4), e(3, 4)});
    const auto b = basis_of({e(1, 2), e(2, 3), e(2, 4)});
    const auto b2 = basis_of({e(1, 2), e(2, 3), e(3, 4)});
    const auto tri_bij = exchange_bijection(k4, b, b2);
    CHECK(tri_bij.map == std::vector<int>{e(1, 2), e(2, 3), e(3, 4)});
    CHECK(slack_by_ordering(triangle, tri_bij) == 0);
}

TEST_CASE("slack_by_ordering requires full intersection") {
    const auto k4 = k_n(4);
    const auto star = basis_of({e(1, 2), e(1, 3), e(1, 4)});
    const auto triangle = flat_of(k4, Subset{e(2, 3), e(2, 4), e(3, 4)});
    CHECK_THROWS_AS(slack_by_ordering(triangle, exchange_bijection(k4, star, star)), FullIntersectionRequired);
}

TEST_CASE("slack_by_ordering equals the slack for every tight source") {
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto bases = enumerate_bases(m);
        for (Subset f : enumerate_flats(m)) {
            const auto ineq = flat_of(m, f);
            for (const auto& b : bases) {
                if ((b.set() & f).size() != ineq.rhs) continue;
                for (const auto& b2 : bases)
                    REQUIRE(slack_by_ordering(ineq, exchange_bijection(m, b, b2)) == ineq.rhs - (b2.set() & f).size());
            }
        }
    }
}

TEST_CASE("the count does not depend on which valid bijection is used") {
    for (const auto& [name, m] : small_suite()) {
        INFO(name);
        const auto bases = enumerate_bases(m);
        const auto rows = flacets(m);
        for (const auto& b : bases)
            for (const auto& b2 : bases) {
                if ((b.set() - b2.set()).size() > 5) continue;
                const auto every = all_exchange_bijections(m, b, b2);
                REQUIRE_FALSE(every.empty());
                for (const auto& f : rows) {
                    if ((b.set() & f.flat).size() != f.rhs) continue;
                    const int want = f.rhs - (b2.set() & f.flat).size();
                    for (const auto& bij : every) REQUIRE(slack_by_ordering(f, bij) == want);
                }
            }
    }
}
