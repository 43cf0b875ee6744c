#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid_xf/subset.hpp"

namespace matroid_xf {

/// Limits on exhaustive computations. Exceeding one raises ResourceLimit
/// instead of truncating.
struct EnumerationCaps {
    int max_ground = 24;
    std::size_t max_bases = 1'000'000;
    /// Basis count above which minimum_hitting_family refuses to run.
    std::size_t max_cover_columns = 5000;

    /// Defaults, overridden by MATROID_XF_CAPS ("ground=30,bases=2000000,cover=10000").
    static EnumerationCaps from_environment();
    /// Parses the MATROID_XF_CAPS syntax on top of the defaults.
    static EnumerationCaps parse(const std::string& text);
};

/// Undirected multigraph; edge i is ground-set element i of its cycle matroid.
struct Graph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    static Graph complete(int n);
    /// Simple and every vertex pair joined.
    bool is_complete() const;
    /// Index of edge {u, v}, if present.
    std::optional<int> edge_index(int u, int v) const;
};

/// A basis as its sorted element list b_1 < ... < b_r.
class Basis {
  public:
    Basis() = default;
    explicit Basis(Subset set) : set_(set), elements_(set.elements()) {}

    const std::vector<int>& elements() const { return elements_; }
    Subset set() const { return set_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Basis& a, const Basis& b) { return a.set_ == b.set_; }
    friend auto operator<=>(const Basis& a, const Basis& b) { return a.elements_ <=> b.elements_; }

  private:
    Subset set_;
    std::vector<int> elements_;
};

enum class MatroidKind { uniform, graphic, binary, explicit_bases, dual_of, direct_sum, minor };

std::string to_string(MatroidKind kind);

namespace detail {
struct RankOracle {
    virtual ~RankOracle() = default;
    virtual int rank(Subset s) const = 0;
};
}  // namespace detail

/// Immutable matroid on elements 0..n-1 given by its rank oracle. Public
/// constructors reject loops; copies share the oracle.
class Matroid {
  public:
    /// U_{r,n}; requires 1 <= r <= n.
    static Matroid uniform(int r, int n);
    /// Cycle matroid; self-loops are rejected, parallel edges are fine.
    static Matroid graphic(Graph g);
    /// Column matroid of a 0/1 matrix over GF(2); zero columns are rejected.
    static Matroid binary(const std::vector<std::vector<int>>& rows);
    /// Matroid given by its basis list. The exchange axiom is verified.
    static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);

    int size() const { return n_; }
    /// r = rk(E).
    int rank() const { return full_rank_; }
    /// rk(s). Throws InvalidInput if s mentions an element >= n.
    int rank(Subset s) const;
    MatroidKind kind() const { return kind_; }
    Subset ground() const { return Subset::full(n_); }
    /// The underlying graph for graphic matroids, null otherwise.
    const Graph* graph() const { return graph_.get(); }

  private:
    Matroid(std::shared_ptr<const detail::RankOracle> oracle, int n, MatroidKind kind,
            bool require_loopless);

    friend Matroid dual(const Matroid& m);
    friend Matroid direct_sum(const Matroid& a, const Matroid& b);
    friend struct MinorAccess;

    std::shared_ptr<const detail::RankOracle> oracle_;
    std::shared_ptr<const Graph> graph_;
    int n_ = 0;
    int full_rank_ = 0;
    MatroidKind kind_ = MatroidKind::uniform;
};

/// rk*(S) = |S| + rk(E - S) - r. Throws InvalidInput if m has a coloop.
Matroid dual(const Matroid& m);
/// Elements of b are shifted by a.size().
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// A minor with its element map: elements[i] is the original index of
/// minor element i. Minors may contain loops.
struct Minor {
    Matroid matroid;
    std::vector<int> elements;
};

Minor restriction(const Matroid& m, Subset keep);
/// Contraction of m by s; the ground set becomes E - s.
Minor contraction(const Matroid& m, Subset s);

/// {e : rk(s+e) = rk(s)} union s.
Subset closure(const Matroid& m, Subset s);
bool is_flat(const Matroid& m, Subset s);

/// All bases in lexicographic order of their element lists.
std::vector<Basis> enumerate_bases(const Matroid& m, const EnumerationCaps& caps = {});
/// All flats ordered by rank, then lexicographically.
std::vector<Subset> enumerate_flats(const Matroid& m, const EnumerationCaps& caps = {});
/// All circuits, ordered by size, then lexicographically.
std::vector<Subset> enumerate_circuits(const Matroid& m, const EnumerationCaps& caps = {});
/// Connected components (classes of the "share a circuit" relation), ordered
/// by smallest element.
std::vector<Subset> connected_components(const Matroid& m, const EnumerationCaps& caps = {});
bool is_connected(const Matroid& m, const EnumerationCaps& caps = {});

}  // namespace matroid_xf
