#include "matroid_xf/protocol.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "matroid_xf/errors.hpp"

namespace matroid_xf {

namespace {

bool tight(const Basis& b, const FlatInequality& f) { return (b.set() & f.flat).size() == f.rhs; }

// Flacets grouped by the family member Alice would announce for them.
std::vector<std::vector<const FlatInequality*>> route_flacets(const HittingFamily& family,
                                                              const std::vector<FlatInequality>& flacets) {
    std::vector<std::vector<const FlatInequality*>> routed(family.size());
    for (const auto& f : flacets) routed[static_cast<std::size_t>(alice_choice(family, f))].push_back(&f);
    return routed;
}

void require_complete(const Graph& g) {
    if (g.vertices < 3 || !g.is_complete())
        throw InvalidInput("one-bit protocol needs a complete graph on at least 3 vertices");
}

}  // namespace

int ceil_log2(std::size_t x) {
    int bits = 0;
    while ((std::size_t{1} << bits) < x) ++bits;
    return bits;
}

int alice_choice(const HittingFamily& family, const FlatInequality& f) {
    for (std::size_t k = 0; k < family.bases.size(); ++k) {
        if (tight(family.bases[k], f)) return static_cast<int>(k);
    }
    throw NotAHittingFamily("no family member is tight at flacet {" + to_label(f.flat, ',') + "}");
}

int alice_output(const FlatInequality& f, const Basis& b, int position, int element) {
    if (position < 1 || position > b.size())
        throw InvalidInput("position " + std::to_string(position) + " outside 1.." + std::to_string(b.size()));
    return (!f.flat.contains(element) && f.flat.contains(b[position - 1])) ? b.size() : 0;
}

Rational expected_value(const Matroid& m, const HittingFamily& family, const FlatInequality& f,
                        const Basis& bob) {
    const Basis& alice = family.bases[static_cast<std::size_t>(alice_choice(family, f))];
    const auto bij = exchange_bijection(m, alice, bob);
    const int r = alice.size();
    Rational total = 0;
    for (int i = 1; i <= r; ++i) total += alice_output(f, alice, i, bij.image(i - 1));
    return total / r;
}

std::vector<Transcript> enumerate_transcripts(const Matroid& m, const HittingFamily& family,
                                              const std::vector<FlatInequality>& flacets,
                                              const std::vector<Basis>& bases) {
    const auto routed = route_flacets(family, flacets);
    std::set<Transcript> out;
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (routed[k].empty()) continue;
        const Basis& alice = family.bases[k];
        std::set<std::pair<int, int>> emitted;
        for (const Basis& bob : bases) {
            const auto bij = exchange_bijection(m, alice, bob);
            for (int i = 0; i < alice.size(); ++i) emitted.emplace(i + 1, bij.image(i));
        }
        for (const auto& [position, element] : emitted) {
            const bool live = std::any_of(routed[k].begin(), routed[k].end(), [&](const FlatInequality* f) {
                return alice_output(*f, alice, position, element) != 0;
            });
            if (live) out.insert({static_cast<int>(k), position, element});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Transcript> enumerate_transcripts(const Matroid& m, const HittingFamily& family,
                                              const EnumerationCaps& caps) {
    return enumerate_transcripts(m, family, flacets(m, caps), enumerate_bases(m, caps));
}

ProtocolStats protocol_stats(const Matroid& m, const HittingFamily& family, const EnumerationCaps& caps) {
    ProtocolStats stats;
    stats.bits = ceil_log2(std::max<std::size_t>(family.size(), 1)) +
                 ceil_log2(static_cast<std::size_t>(m.size())) +
                 ceil_log2(static_cast<std::size_t>(m.rank()));
    stats.transcript_count = family.empty() ? 0 : enumerate_transcripts(m, family, caps).size();
    return stats;
}

std::string transcripts_csv(const std::vector<Transcript>& transcripts) {
    std::ostringstream out;
    out << "family_index,position,element\n";
    for (const auto& t : transcripts) out << t.family_index << ',' << t.position << ',' << t.element << '\n';
    return out.str();
}

std::vector<int> orient_away(const Graph& g, const Basis& tree, int center) {
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(g.vertices));
    const auto& elems = tree.elements();
    for (std::size_t pos = 0; pos < elems.size(); ++pos) {
        const auto [u, v] = g.edges[static_cast<std::size_t>(elems[pos])];
        incident[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(pos));
        incident[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(pos));
    }
    std::vector<int> head(elems.size(), -1);
    std::vector<char> seen(static_cast<std::size_t>(g.vertices), 0);
    std::queue<int> frontier;
    frontier.push(center);
    seen[static_cast<std::size_t>(center)] = 1;
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (const auto& [w, pos] : incident[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            head[static_cast<std::size_t>(pos)] = w;
            frontier.push(w);
        }
    }
    if (std::find(head.begin(), head.end(), -1) != head.end())
        throw InvalidInput("edge set {" + to_label(tree.set(), ',') + "} is not a spanning tree");
    return head;
}

ExchangeBijection star_bijection(const Graph& g, const Basis& tree, int center) {
    require_complete(g);
    const auto head = orient_away(g, tree, center);
    Subset star_set;
    for (int w = 0; w < g.vertices; ++w)
        if (w != center) star_set.insert(*g.edge_index(center, w));
    ExchangeBijection bij{Basis(star_set), tree, {}};
    for (int e : bij.source.elements()) {
        const auto [a, b] = g.edges[static_cast<std::size_t>(e)];
        const int w = a == center ? b : a;
        const auto pos = static_cast<std::size_t>(std::find(head.begin(), head.end(), w) - head.begin());
        bij.map.push_back(tree[static_cast<int>(pos)]);
    }
    return bij;
}

int star_alice_output(const Graph& g, const FlatInequality& f, int center, int edge, int head, int r) {
    const int star_edge = *g.edge_index(center, head);
    return (f.flat.contains(star_edge) && !f.flat.contains(edge)) ? r : 0;
}

Rational star_expected_value(const Graph& g, const HittingFamily& stars, const FlatInequality& f,
                             const Basis& tree) {
    require_complete(g);
    const int center = alice_choice(stars, f);
    const auto head = orient_away(g, tree, center);
    const int r = tree.size();
    Rational total = 0;
    for (int pos = 0; pos < r; ++pos)
        total += star_alice_output(g, f, center, tree[pos], head[static_cast<std::size_t>(pos)], r);
    return total / r;
}

std::vector<StarTranscript> spanning_tree_transcripts(const Graph& g, const HittingFamily& stars,
                                                      const std::vector<FlatInequality>& flacets,
                                                      const std::vector<Basis>& trees) {
    require_complete(g);
    const auto routed = route_flacets(stars, flacets);
    const int r = g.vertices - 1;
    std::set<StarTranscript> out;
    for (std::size_t center = 0; center < stars.size(); ++center) {
        if (routed[center].empty()) continue;
        std::set<std::pair<int, int>> emitted;
        for (const Basis& tree : trees) {
            const auto head = orient_away(g, tree, static_cast<int>(center));
            for (int pos = 0; pos < tree.size(); ++pos) emitted.emplace(tree[pos], head[static_cast<std::size_t>(pos)]);
        }
        for (const auto& [edge, head] : emitted) {
            const bool live = std::any_of(routed[center].begin(), routed[center].end(), [&](const FlatInequality* f) {
                return star_alice_output(g, *f, static_cast<int>(center), edge, head, r) != 0;
            });
            if (live) out.insert({static_cast<int>(center), edge, head});
        }
    }
    return {out.begin(), out.end()};
}

std::vector<StarTranscript> spanning_tree_transcripts(const Graph& g, const EnumerationCaps& caps) {
    require_complete(g);
    const Matroid m = Matroid::graphic(g);
    const auto rows = flacets(m, caps);
    return spanning_tree_transcripts(g, make_hitting_family(rows, star_bases(g)), rows,
                                     enumerate_bases(m, caps));
}

int star_protocol_bits(const Graph& g) {
    require_complete(g);
    const auto n = static_cast<std::size_t>(g.vertices);
    return ceil_log2(n * (n - 1) / 2) + ceil_log2(n) + 1;
}

}  // namespace matroid_xf
