#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "matroid_xf/exchange.hpp"
#include "matroid_xf/hitting.hpp"
#include "matroid_xf/rational.hpp"

namespace matroid_xf {

// Two-party slack protocol. Alice holds a flacet F, Bob holds a basis B'.
// Alice announces the first family member B tight at F; Bob orders B'
// against B by the canonical exchange bijection, picks a position i
// uniformly and announces (i, b'_i). Alice outputs r when b_i is in F and
// b'_i is not, 0 otherwise. The expectation is the slack of B' at F.

/// One run of the protocol: (k, i, b'_i) with i 1-based.
struct Transcript {
    int family_index = 0;
    int position = 1;
    int element = 0;

    friend auto operator<=>(const Transcript&, const Transcript&) = default;
};

struct ProtocolStats {
    int bits = 0;
    std::size_t transcript_count = 0;
};

/// ceil(log2(x)) for x >= 1.
int ceil_log2(std::size_t x);

/// Smallest index k with |family[k] & F| = rk(F). Throws NotAHittingFamily.
int alice_choice(const HittingFamily& family, const FlatInequality& f);

/// r if element is outside F and b_position is inside F, else 0.
/// `position` is 1-based and r = |b|.
int alice_output(const FlatInequality& f, const Basis& b, int position, int element);

/// Exact expectation of Alice's output over Bob's r equally likely positions.
Rational expected_value(const Matroid& m, const HittingFamily& family, const FlatInequality& f,
                        const Basis& bob);

/// Transcripts that can occur and can carry a nonzero output: some flacet
/// routed to k has b_i in F and e outside F, and some basis B' has
/// sigma(b_i) = e under the canonical bijection from family[k]. Sorted.
std::vector<Transcript> enumerate_transcripts(const Matroid& m, const HittingFamily& family,
                                              const std::vector<FlatInequality>& flacets,
                                              const std::vector<Basis>& bases);
std::vector<Transcript> enumerate_transcripts(const Matroid& m, const HittingFamily& family,
                                              const EnumerationCaps& caps = {});

/// bits = ceil(log2 max(h,1)) + ceil(log2 n) + ceil(log2 r).
ProtocolStats protocol_stats(const Matroid& m, const HittingFamily& family,
                             const EnumerationCaps& caps = {});

/// "family_index,position,element" header then one transcript per line.
std::string transcripts_csv(const std::vector<Transcript>& transcripts);

// Complete-graph refinement: Alice announces a star center u, Bob orients
// his spanning tree away from u and sends an edge e = (v, w) plus one bit
// naming its head w. The star edge {u, w} plays the role of b_i.

struct StarTranscript {
    int center = 0;
    int edge = 0;
    int head = 0;

    friend auto operator<=>(const StarTranscript&, const StarTranscript&) = default;
};

/// Head vertex of every tree edge when the tree is rooted at `center`,
/// indexed like tree.elements().
std::vector<int> orient_away(const Graph& g, const Basis& tree, int center);

/// Bijection from the star at `center` to `tree` induced by orient_away:
/// the star edge {center, w} maps to the tree edge whose head is w.
ExchangeBijection star_bijection(const Graph& g, const Basis& tree, int center);

/// Output of Alice holding F when Bob sends (edge, head) against star `center`.
int star_alice_output(const Graph& g, const FlatInequality& f, int center, int edge, int head, int r);

/// Expectation of the one-bit protocol for flacet F and spanning tree `tree`.
Rational star_expected_value(const Graph& g, const HittingFamily& stars, const FlatInequality& f,
                             const Basis& tree);

/// Occurring transcripts of the one-bit protocol with a possibly nonzero
/// output, sorted. Requires a complete graph.
std::vector<StarTranscript> spanning_tree_transcripts(const Graph& g, const EnumerationCaps& caps = {});
std::vector<StarTranscript> spanning_tree_transcripts(const Graph& g, const HittingFamily& stars,
                                                      const std::vector<FlatInequality>& flacets,
                                                      const std::vector<Basis>& trees);

/// ceil(log2 C(n,2)) + ceil(log2 n) + 1 for K_n.
int star_protocol_bits(const Graph& g);

}  // namespace matroid_xf
