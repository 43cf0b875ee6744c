#include "matroid_xf/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "matroid_xf/errors.hpp"

namespace matroid_xf {

namespace {

class UniformOracle final : public detail::RankOracle {
  public:
    explicit UniformOracle(int r) : r_(r) {}
    int rank(Subset s) const override { return std::min(s.size(), r_); }

  private:
    int r_;
};

class GraphicOracle final : public detail::RankOracle {
  public:
    explicit GraphicOracle(std::shared_ptr<const Graph> g) : g_(std::move(g)) {}

    // Size of a spanning forest of the chosen edges, by union-find.
    int rank(Subset s) const override {
        std::vector<int> parent(static_cast<std::size_t>(g_->vertices));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int forest = 0;
        for (int e : s.elements()) {
            const auto [u, v] = g_->edges[static_cast<std::size_t>(e)];
            const int ru = find(u);
            const int rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                ++forest;
            }
        }
        return forest;
    }

  private:
    std::shared_ptr<const Graph> g_;
};

class BinaryOracle final : public detail::RankOracle {
  public:
    explicit BinaryOracle(std::vector<std::uint64_t> columns) : columns_(std::move(columns)) {}

    // GF(2) elimination; basis[b] holds a vector whose leading bit is b.
    int rank(Subset s) const override {
        std::uint64_t basis[64] = {};
        int rank = 0;
        for (int e : s.elements()) {
            std::uint64_t v = columns_[static_cast<std::size_t>(e)];
            while (v != 0) {
                const int lead = 63 - std::countl_zero(v);
                if (basis[lead] == 0) {
                    basis[lead] = v;
                    ++rank;
                    break;
                }
                v ^= basis[lead];
            }
        }
        return rank;
    }

  private:
    std::vector<std::uint64_t> columns_;
};

class BasesOracle final : public detail::RankOracle {
  public:
    explicit BasesOracle(std::vector<Subset> bases) : bases_(std::move(bases)) {}
    int rank(Subset s) const override {
        int best = 0;
        for (Subset b : bases_) best = std::max(best, (s & b).size());
        return best;
    }

  private:
    std::vector<Subset> bases_;
};

class DualOracle final : public detail::RankOracle {
  public:
    DualOracle(std::shared_ptr<const detail::RankOracle> primal, int n, int r)
        : primal_(std::move(primal)), n_(n), r_(r) {}
    int rank(Subset s) const override {
        return s.size() + primal_->rank(Subset::full(n_) - s) - r_;
    }

  private:
    std::shared_ptr<const detail::RankOracle> primal_;
    int n_;
    int r_;
};

class DirectSumOracle final : public detail::RankOracle {
  public:
    DirectSumOracle(std::shared_ptr<const detail::RankOracle> a, int na,
                    std::shared_ptr<const detail::RankOracle> b)
        : a_(std::move(a)), b_(std::move(b)), na_(na) {}
    int rank(Subset s) const override {
        const Subset low = s & Subset::full(na_);
        const Subset high(na_ >= 64 ? 0 : s.mask() >> na_);
        return a_->rank(low) + b_->rank(high);
    }

  private:
    std::shared_ptr<const detail::RankOracle> a_;
    std::shared_ptr<const detail::RankOracle> b_;
    int na_;
};

// Restriction (contracted empty) or contraction to `elements`, rank of X
// is rk(map(X) + contracted) - rk(contracted).
class MinorOracle final : public detail::RankOracle {
  public:
    MinorOracle(Matroid parent, std::vector<int> elements, Subset contracted)
        : parent_(std::move(parent)),
          elements_(std::move(elements)),
          contracted_(contracted),
          offset_(parent_.rank(contracted)) {}
    int rank(Subset s) const override {
        Subset mapped = contracted_;
        for (int e : s.elements()) mapped.insert(elements_[static_cast<std::size_t>(e)]);
        return parent_.rank(mapped) - offset_;
    }

  private:
    Matroid parent_;
    std::vector<int> elements_;
    Subset contracted_;
    int offset_;
};

void check_ground_size(int n) {
    if (n < 0 || n > kMaxGroundSize) {
        throw InvalidInput("ground set size " + std::to_string(n) + " outside 0.." +
                           std::to_string(kMaxGroundSize));
    }
}

// Calls visit(Subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(Subset::of(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void check_enumerable(const Matroid& m, const EnumerationCaps& caps, const char* what) {
    if (m.size() > caps.max_ground) {
        throw ResourceLimit(std::string(what) + ": ground set of size " + std::to_string(m.size()) +
                            " exceeds enumeration cap " + std::to_string(caps.max_ground));
    }
}

}  // namespace

struct MinorAccess {
    static Matroid make(std::shared_ptr<const detail::RankOracle> oracle, int n) {
        return Matroid(std::move(oracle), n, MatroidKind::minor, false);
    }
};

EnumerationCaps EnumerationCaps::parse(const std::string& text) {
    EnumerationCaps caps;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("malformed cap entry '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::size_t parsed = 0;
        unsigned long long number = 0;
        try {
            number = std::stoull(value, &parsed);
        } catch (const std::exception&) {
            parsed = 0;
        }
        if (parsed != value.size() || value.empty())
            throw InvalidInput("malformed cap value '" + item + "'");
        if (key == "ground") {
            caps.max_ground = static_cast<int>(std::min<unsigned long long>(number, kMaxGroundSize));
        } else if (key == "bases") {
            caps.max_bases = number;
        } else if (key == "cover") {
            caps.max_cover_columns = number;
        } else {
            throw InvalidInput("unknown cap '" + key + "'");
        }
    }
    return caps;
}

EnumerationCaps EnumerationCaps::from_environment() {
    const char* text = std::getenv("MATROID_XF_CAPS");
    return text == nullptr ? EnumerationCaps{} : parse(text);
}

Graph Graph::complete(int n) {
    Graph g;
    g.vertices = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

bool Graph::is_complete() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u == v) return false;
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return false;
    }
    return static_cast<long long>(seen.size()) ==
           static_cast<long long>(vertices) * (vertices - 1) / 2;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::string to_string(MatroidKind kind) {
    switch (kind) {
        case MatroidKind::uniform: return "uniform";
        case MatroidKind::graphic: return "graphic";
        case MatroidKind::binary: return "binary";
        case MatroidKind::explicit_bases: return "bases";
        case MatroidKind::dual_of: return "dual";
        case MatroidKind::direct_sum: return "direct_sum";
        case MatroidKind::minor: return "minor";
    }
    return "unknown";
}

Matroid::Matroid(std::shared_ptr<const detail::RankOracle> oracle, int n, MatroidKind kind,
                 bool require_loopless)
    : oracle_(std::move(oracle)), n_(n), kind_(kind) {
    check_ground_size(n);
    full_rank_ = oracle_->rank(Subset::full(n));
    if (!require_loopless) return;
    for (int e = 0; e < n; ++e) {
        if (oracle_->rank(Subset::singleton(e)) != 1)
            throw InvalidInput("element " + std::to_string(e) + " is a loop");
    }
    if (full_rank_ <= 0) throw InvalidInput("matroid has rank 0");
}

int Matroid::rank(Subset s) const {
    if (s.span() > n_) {
        throw InvalidInput("element " + std::to_string(s.span() - 1) +
                           " outside ground set of size " + std::to_string(n_));
    }
    return oracle_->rank(s);
}

Matroid Matroid::uniform(int r, int n) {
    check_ground_size(n);
    if (r < 1 || r > n) {
        throw InvalidInput("uniform matroid needs 1 <= r <= n, got r=" + std::to_string(r) +
                           " n=" + std::to_string(n));
    }
    return Matroid(std::make_shared<UniformOracle>(r), n, MatroidKind::uniform, true);
}

Matroid Matroid::graphic(Graph g) {
    if (g.vertices < 0) throw InvalidInput("negative vertex count");
    check_ground_size(static_cast<int>(g.edges.size()));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
            throw InvalidInput("edge " + std::to_string(i) + " references a vertex outside 0.." +
                               std::to_string(g.vertices - 1));
        }
        if (u == v) throw InvalidInput("edge " + std::to_string(i) + " is a loop");
    }
    auto graph = std::make_shared<const Graph>(std::move(g));
    Matroid m(std::make_shared<GraphicOracle>(graph), static_cast<int>(graph->edges.size()),
              MatroidKind::graphic, true);
    m.graph_ = std::move(graph);
    return m;
}

Matroid Matroid::binary(const std::vector<std::vector<int>>& rows) {
    if (rows.size() > 64) throw InvalidInput("binary matrix has more than 64 rows");
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    check_ground_size(static_cast<int>(cols));
    std::vector<std::uint64_t> columns(cols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("binary matrix rows have unequal length");
        for (std::size_t j = 0; j < cols; ++j) {
            const int bit = rows[i][j];
            if (bit != 0 && bit != 1) throw InvalidInput("binary matrix entries must be 0 or 1");
            if (bit == 1) columns[j] |= std::uint64_t{1} << i;
        }
    }
    for (std::size_t j = 0; j < cols; ++j) {
        if (columns[j] == 0) throw InvalidInput("element " + std::to_string(j) + " is a loop");
    }
    return Matroid(std::make_shared<BinaryOracle>(std::move(columns)), static_cast<int>(cols),
                   MatroidKind::binary, true);
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
    check_ground_size(n);
    if (bases.empty()) throw InvalidInput("basis list is empty");
    std::vector<Subset> sets;
    std::unordered_set<std::uint64_t> seen;
    const std::size_t r = bases.front().size();
    for (const auto& b : bases) {
        if (b.size() != r) throw InvalidInput("bases have unequal sizes");
        Subset s;
        for (int e : b) {
            if (e < 0 || e >= n) throw InvalidInput("basis element " + std::to_string(e) + " out of range");
            if (s.contains(e)) throw InvalidInput("basis lists element " + std::to_string(e) + " twice");
            s.insert(e);
        }
        if (seen.insert(s.mask()).second) sets.push_back(s);
    }
    // Exchange axiom: for B1, B2 and x in B1 - B2 some y in B2 - B1 has B1 - x + y a basis.
    for (Subset b1 : sets) {
        for (Subset b2 : sets) {
            for (int x : (b1 - b2).elements()) {
                bool found = false;
                for (int y : (b2 - b1).elements()) {
                    if (seen.contains(b1.without(x).with(y).mask())) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    throw InvalidInput("basis list violates the exchange axiom at {" +
                                       to_label(b1, ',') + "}, {" + to_label(b2, ',') + "}");
                }
            }
        }
    }
    return Matroid(std::make_shared<BasesOracle>(std::move(sets)), n, MatroidKind::explicit_bases,
                   true);
}

Matroid dual(const Matroid& m) {
    return Matroid(std::make_shared<DualOracle>(m.oracle_, m.n_, m.full_rank_), m.n_,
                   MatroidKind::dual_of, true);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    check_ground_size(a.n_ + b.n_);
    return Matroid(std::make_shared<DirectSumOracle>(a.oracle_, a.n_, b.oracle_), a.n_ + b.n_,
                   MatroidKind::direct_sum, true);
}

Minor restriction(const Matroid& m, Subset keep) {
    (void)m.rank(keep);
    auto elements = keep.elements();
    const int size = static_cast<int>(elements.size());
    auto oracle = std::make_shared<MinorOracle>(m, elements, Subset{});
    return Minor{MinorAccess::make(std::move(oracle), size), std::move(elements)};
}

Minor contraction(const Matroid& m, Subset s) {
    (void)m.rank(s);
    auto elements = (m.ground() - s).elements();
    const int size = static_cast<int>(elements.size());
    auto oracle = std::make_shared<MinorOracle>(m, elements, s);
    return Minor{MinorAccess::make(std::move(oracle), size), std::move(elements)};
}

Subset closure(const Matroid& m, Subset s) {
    const int base = m.rank(s);
    Subset out = s;
    for (int e = 0; e < m.size(); ++e) {
        if (!s.contains(e) && m.rank(s.with(e)) == base) out.insert(e);
    }
    return out;
}

bool is_flat(const Matroid& m, Subset s) { return closure(m, s) == s; }

std::vector<Basis> enumerate_bases(const Matroid& m, const EnumerationCaps& caps) {
    check_enumerable(m, caps, "enumerate_bases");
    std::vector<Basis> out;
    const int r = m.rank();
    for_each_combination(m.size(), r, [&](Subset s) {
        if (m.rank(s) != r) return;
        if (out.size() >= caps.max_bases) {
            throw ResourceLimit("enumerate_bases: more than " + std::to_string(caps.max_bases) +
                                " bases");
        }
        out.emplace_back(s);
    });
    return out;
}

std::vector<Subset> enumerate_flats(const Matroid& m, const EnumerationCaps& caps) {
    check_enumerable(m, caps, "enumerate_flats");
    // Every flat other than cl(empty) covers a smaller flat F as cl(F + e).
    std::vector<Subset> flats{closure(m, Subset{})};
    std::unordered_set<std::uint64_t> seen{flats.front().mask()};
    for (std::size_t i = 0; i < flats.size(); ++i) {
        const Subset f = flats[i];
        for (int e = 0; e < m.size(); ++e) {
            if (f.contains(e)) continue;
            const Subset g = closure(m, f.with(e));
            if (seen.insert(g.mask()).second) flats.push_back(g);
        }
    }
    std::vector<std::pair<int, Subset>> keyed;
    keyed.reserve(flats.size());
    for (Subset f : flats) keyed.emplace_back(m.rank(f), f);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
    });
    std::vector<Subset> out;
    out.reserve(keyed.size());
    for (const auto& [rank, f] : keyed) out.push_back(f);
    return out;
}

std::vector<Subset> enumerate_circuits(const Matroid& m, const EnumerationCaps& caps) {
    check_enumerable(m, caps, "enumerate_circuits");
    std::vector<Subset> out;
    // A circuit has size at most r + 1.
    for (int k = 1; k <= std::min(m.size(), m.rank() + 1); ++k) {
        for_each_combination(m.size(), k, [&](Subset c) {
            if (m.rank(c) != k - 1) return;
            for (int e : c.elements()) {
                if (m.rank(c.without(e)) != k - 1) return;
            }
            out.push_back(c);
        });
    }
    return out;
}

std::vector<Subset> connected_components(const Matroid& m, const EnumerationCaps& caps) {
    const int n = m.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (Subset c : enumerate_circuits(m, caps)) {
        const auto elems = c.elements();
        for (std::size_t i = 1; i < elems.size(); ++i) parent[find(elems[i])] = find(elems[0]);
    }
    std::vector<Subset> components;
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        const int root = find(e);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(components.size());
            components.emplace_back();
        }
        components[static_cast<std::size_t>(slot[root])].insert(e);
    }
    return components;
}

bool is_connected(const Matroid& m, const EnumerationCaps& caps) {
    return connected_components(m, caps).size() <= 1;
}

}  // namespace matroid_xf
