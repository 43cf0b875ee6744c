#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "matroid_xf/errors.hpp"
#include "matroid_xf/hitting.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace matroid_xf;
using namespace matroid_xf::testing;

namespace {

int e(int a, int b) { return k4_edge(a, b); }

int brute_force_h(const Matroid& m) {
    const auto s = slack_matrix(m);
    std::vector<std::vector<char>> covers;
    for (Eigen::Index j = 0; j < s.entries.cols(); ++j) {
        std::vector<char> col;
        for (Eigen::Index i = 0; i < s.entries.rows(); ++i) col.push_back(s.entries(i, j) == 0);
        covers.push_back(col);
    }
    return oracle::minimum_cover_size(covers, s.rows.size());
}

}  // namespace

TEST_CASE("is_hitting_family examples") {
    const auto k4 = k_n(4);
    const std::vector<Basis> stars{basis_of({e(1, 2), e(1, 3), e(1, 4)}), basis_of({e(1, 2), e(2, 3), e(2, 4)}),
                                   basis_of({e(1, 3), e(2, 3), e(3, 4)})};
    CHECK(is_hitting_family(k4, stars).hitting);

    const auto miss = is_hitting_family(Matroid::uniform(2, 3), {basis_of({0, 1})});
    CHECK_FALSE(miss.hitting);
    REQUIRE(miss.uncovered);
    CHECK(miss.uncovered->flat == Subset{2});

    CHECK(is_hitting_family(Matroid::uniform(1, 3), {}).hitting);
}

TEST_CASE("is_hitting_family rejects non-bases") {
    CHECK_THROWS_AS(is_hitting_family(Matroid::uniform(2, 3), {basis_of({0})}), InvalidInput);
    CHECK_THROWS_AS(is_hitting_family(Matroid::uniform(2, 3), {basis_of({0, 5})}), InvalidInput);
    CHECK_THROWS_AS(is_hitting_family(k_n(4), {basis_of({e(1, 2), e(1, 3), e(2, 3)})}), InvalidInput);
}

TEST_CASE("make_hitting_family records first coverage") {
    const auto rows = flacets(Matroid::uniform(2, 3));
    const auto fam = make_hitting_family(rows, {basis_of({0, 1}), basis_of({0, 2})});
    CHECK(fam.coverage == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(make_hitting_family(rows, {basis_of({0, 1})}), NotAHittingFamily);
}

TEST_CASE("greedy_hitting_family examples") {
    CHECK(greedy_hitting_family(Matroid::uniform(2, 3)).size() == 2);
    CHECK(greedy_hitting_family(k_n(4)).size() == 3);
    CHECK(greedy_hitting_family(Matroid::uniform(1, 3)).size() == 0);
}

TEST_CASE("greedy sizes match the oracle") {
    // Frozen from tests/oracles/derive_expected.py.
    const std::map<std::string, std::size_t> greedy{
        {"U(1,3)", 0}, {"U(2,3)", 2}, {"U(2,4)", 2}, {"U(3,5)", 2},       {"M(K4)", 3},
        {"M(K5)", 4},  {"Fano", 3},   {"Fano*", 3},  {"M(K3)+U(2,3)", 2},
    };
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto fam = greedy_hitting_family(m);
        CHECK(fam.size() == greedy.at(name));
        CHECK(is_hitting_family(m, fam.bases).hitting);
    }
}

TEST_CASE("minimum_hitting_family examples") {
    const auto k4 = minimum_hitting_family(k_n(4));
    CHECK(k4.size() == 2);
    CHECK(is_hitting_family(k_n(4), k4.bases).hitting);
    const auto u24 = minimum_hitting_family(Matroid::uniform(2, 4));
    CHECK(u24.size() == 2);
    CHECK(u24.bases == std::vector<Basis>{basis_of({0, 1}), basis_of({2, 3})});
    CHECK(minimum_hitting_family(Matroid::uniform(2, 3)).size() == 2);
}

TEST_CASE("minimum hitting numbers match the oracle") {
    const std::map<std::string, std::size_t> h{
        {"U(1,3)", 0}, {"U(2,3)", 2}, {"U(2,4)", 2}, {"U(3,5)", 2},       {"M(K4)", 2},
        {"M(K5)", 3},  {"Fano", 3},   {"Fano*", 3},  {"M(K3)+U(2,3)", 2},
    };
    for (const auto& [name, m] : suite()) {
        INFO(name);
        const auto best = minimum_hitting_family(m);
        CHECK(best.size() == h.at(name));
        CHECK(best.size() <= greedy_hitting_family(m).size());
        CHECK(is_hitting_family(m, best.bases).hitting);
        CHECK(std::is_sorted(best.bases.begin(), best.bases.end()));
        if (m.size() <= 8) CHECK(static_cast<int>(best.size()) == brute_force_h(m));
    }
}

TEST_CASE("minimum_hitting_family respects the cover cap") {
    EnumerationCaps caps;
    caps.max_cover_columns = 10;
    CHECK_THROWS_AS(minimum_hitting_family(k_n(4), caps), ResourceLimit);
    CHECK_NOTHROW(minimum_hitting_family(Matroid::uniform(2, 4), caps));
}

TEST_CASE("hitting number is invariant under duality") {
    for (const auto& m : {Matroid::uniform(2, 4), k_n(4), fano()})
        CHECK(minimum_hitting_family(m).size() == minimum_hitting_family(dual(m)).size());
}

TEST_CASE("flacet hitting number can change under duality") {
    // x_e >= 0 facets are not flat inequalities, so U(3,5) and U(2,5) differ.
    CHECK(minimum_hitting_family(Matroid::uniform(3, 5)).size() == 2);
    CHECK(minimum_hitting_family(dual(Matroid::uniform(3, 5))).size() == 3);
}

TEST_CASE("star_hitting_family examples") {
    const auto k4 = star_hitting_family(Graph::complete(4));
    CHECK(k4.bases == std::vector<Basis>{basis_of({e(1, 2), e(1, 3), e(1, 4)}),
                                         basis_of({e(1, 2), e(2, 3), e(2, 4)}),
                                         basis_of({e(1, 3), e(2, 3), e(3, 4)})});
    CHECK(star_hitting_family(Graph::complete(3)).size() == 2);
    const auto k5 = star_hitting_family(Graph::complete(5));
    CHECK(k5.size() == 4);
    CHECK(is_hitting_family(k_n(5), k5.bases).hitting);
}

TEST_CASE("stars need a complete graph") {
    CHECK_THROWS_AS(star_bases(Graph{4, {{0, 1}, {1, 2}, {2, 3}}}), InvalidInput);
    CHECK_THROWS_AS(star_bases(Graph::complete(2)), InvalidInput);
    auto doubled = Graph::complete(3);
    doubled.edges.push_back({0, 1});
    CHECK_THROWS_AS(star_hitting_family(doubled), InvalidInput);
}

TEST_CASE("direct_sum_family examples") {
    const auto u23 = Matroid::uniform(2, 3);
    const auto u13 = Matroid::uniform(1, 3);
    const auto f23 = minimum_hitting_family(u23);

    const auto both = direct_sum_family(u23, f23, u23, f23);
    CHECK(both.size() == 2);
    CHECK(is_hitting_family(direct_sum(u23, u23), both.bases).hitting);

    const auto padded = direct_sum_family(u23, f23, u13, minimum_hitting_family(u13));
    CHECK(padded.size() == 2);
    for (const auto& b : padded.bases) CHECK((b.set() & Subset{3, 4, 5}) == Subset{3});
    CHECK(is_hitting_family(direct_sum(u23, u13), padded.bases).hitting);

    const auto none = direct_sum_family(u13, {}, u13, {});
    CHECK(none.empty());
}

TEST_CASE("hitting number is subadditive over direct sums") {
    const std::vector<std::pair<Matroid, Matroid>> pairs{
        {Matroid::uniform(2, 3), Matroid::uniform(2, 3)},
        {Matroid::uniform(2, 3), Matroid::uniform(1, 3)},
        {k_n(3), Matroid::uniform(2, 3)},
        {k_n(4), Matroid::uniform(2, 4)},
    };
    for (const auto& [a, b] : pairs) {
        const auto fa = minimum_hitting_family(a);
        const auto fb = minimum_hitting_family(b);
        const auto joined = direct_sum_family(a, fa, b, fb);
        CHECK(is_hitting_family(direct_sum(a, b), joined.bases).hitting);
        CHECK(minimum_hitting_family(direct_sum(a, b)).size() <= fa.size() + fb.size());
    }
    CHECK(minimum_hitting_family(direct_sum(Matroid::uniform(2, 3), Matroid::uniform(2, 3))).size() == 2);
    CHECK(minimum_hitting_family(direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 3))).size() == 2);
}

TEST_CASE("family_text lists one basis per line") {
    CHECK(family_text(minimum_hitting_family(Matroid::uniform(2, 4))) == "0 1\n2 3\n");
}
