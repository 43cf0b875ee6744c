#include "matroid_xf/exchange.hpp"

#include <algorithm>
#include <functional>

#include "matroid_xf/errors.hpp"

namespace matroid_xf {

namespace {

void require_basis(const Matroid& m, const Basis& b, const char* which) {
    if (b.size() != m.rank() || m.rank(b.set()) != m.rank())
        throw InvalidInput(std::string(which) + " {" + to_label(b.set(), ',') + "} is not a basis");
}

bool try_augment(int u, const std::vector<std::vector<int>>& adjacency, std::vector<int>& match_right,
                 std::vector<char>& visited) {
    for (int v : adjacency[static_cast<std::size_t>(u)]) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        visited[static_cast<std::size_t>(v)] = 1;
        if (match_right[static_cast<std::size_t>(v)] < 0 ||
            try_augment(match_right[static_cast<std::size_t>(v)], adjacency, match_right, visited)) {
            match_right[static_cast<std::size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

std::size_t matching_size(const std::vector<std::vector<int>>& adjacency, int right_count) {
    const auto match = max_bipartite_matching(adjacency, right_count);
    return static_cast<std::size_t>(std::count_if(match.begin(), match.end(), [](int v) { return v >= 0; }));
}

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                        int right_count) {
    std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        std::vector<char> visited(static_cast<std::size_t>(right_count), 0);
        try_augment(static_cast<int>(u), adjacency, match_right, visited);
    }
    std::vector<int> match_left(adjacency.size(), -1);
    for (int v = 0; v < right_count; ++v) {
        if (match_right[static_cast<std::size_t>(v)] >= 0)
            match_left[static_cast<std::size_t>(match_right[static_cast<std::size_t>(v)])] = v;
    }
    return match_left;
}

ExchangeBijection exchange_bijection(const Matroid& m, const Basis& source, const Basis& target) {
    require_basis(m, source, "source");
    require_basis(m, target, "target");
    const int r = m.rank();
    const auto left = (source.set() - target.set()).elements();
    const auto right = (target.set() - source.set()).elements();

    // Sorted candidate lists, so the greedy pass below tries images in order.
    std::vector<std::vector<int>> adjacency(left.size());
    for (std::size_t u = 0; u < left.size(); ++u) {
        const Subset without = source.set().without(left[u]);
        for (std::size_t v = 0; v < right.size(); ++v) {
            if (m.rank(without.with(right[v])) == r) adjacency[u].push_back(static_cast<int>(v));
        }
    }
    const int right_count = static_cast<int>(right.size());
    if (matching_size(adjacency, right_count) != left.size()) {
        throw InternalConsistency("no exchange bijection between {" + to_label(source.set(), ',') +
                                  "} and {" + to_label(target.set(), ',') + "}");
    }

    // Fix images one source element at a time, keeping the smallest choice
    // that still admits a perfect matching of the remainder.
    std::vector<int> chosen(left.size(), -1);
    for (std::size_t u = 0; u < left.size(); ++u) {
        for (int v : adjacency[u]) {
            if (std::find(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(u), v) !=
                chosen.begin() + static_cast<std::ptrdiff_t>(u))
                continue;
            std::vector<std::vector<int>> rest;
            for (std::size_t w = u + 1; w < left.size(); ++w) {
                std::vector<int> options;
                for (int x : adjacency[w]) {
                    const bool used =
                        x == v || std::find(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(u),
                                            x) != chosen.begin() + static_cast<std::ptrdiff_t>(u);
                    if (!used) options.push_back(x);
                }
                rest.push_back(std::move(options));
            }
            if (matching_size(rest, right_count) == rest.size()) {
                chosen[u] = v;
                break;
            }
        }
        if (chosen[u] < 0) throw InternalConsistency("lexicographic matching extension failed");
    }

    ExchangeBijection bij{source, target, {}};
    bij.map.reserve(static_cast<std::size_t>(r));
    for (int e : source.elements()) {
        if (target.set().contains(e)) {
            bij.map.push_back(e);
        } else {
            const auto u = static_cast<std::size_t>(std::find(left.begin(), left.end(), e) - left.begin());
            bij.map.push_back(right[static_cast<std::size_t>(chosen[u])]);
        }
    }
    return bij;
}

std::vector<ExchangeBijection> all_exchange_bijections(const Matroid& m, const Basis& source,
                                                       const Basis& target) {
    require_basis(m, source, "source");
    require_basis(m, target, "target");
    const int r = m.rank();
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const Subset without = source.set().without(source[i]);
        for (int f : target.elements()) {
            if (m.rank(without.with(f)) == r) candidates[static_cast<std::size_t>(i)].push_back(f);
        }
    }
    std::vector<ExchangeBijection> out;
    std::vector<int> map(static_cast<std::size_t>(r));
    Subset used;
    std::function<void(int)> extend = [&](int i) {
        if (i == r) {
            out.push_back({source, target, map});
            return;
        }
        for (int f : candidates[static_cast<std::size_t>(i)]) {
            if (used.contains(f)) continue;
            used.insert(f);
            map[static_cast<std::size_t>(i)] = f;
            extend(i + 1);
            used.erase(f);
        }
    };
    extend(0);
    return out;
}

bool is_valid_exchange(const Matroid& m, const ExchangeBijection& bij) {
    const int r = m.rank();
    if (static_cast<int>(bij.map.size()) != bij.source.size() || bij.source.size() != r) return false;
    Subset image;
    for (int i = 0; i < r; ++i) {
        const int f = bij.image(i);
        if (f < 0 || f >= m.size() || !bij.target.set().contains(f) || image.contains(f)) return false;
        image.insert(f);
        if (m.rank(bij.source.set().without(bij.source[i]).with(f)) != r) return false;
    }
    return image == bij.target.set();
}

int slack_by_ordering(const FlatInequality& f, const ExchangeBijection& bij) {
    if ((bij.source.set() & f.flat).size() != f.rhs) {
        throw FullIntersectionRequired("source basis {" + to_label(bij.source.set(), ',') +
                                       "} does not fully intersect flat {" + to_label(f.flat, ',') + "}");
    }
    int count = 0;
    for (int i = 0; i < bij.source.size(); ++i) {
        const bool source_in = f.flat.contains(bij.source[i]);
        const bool image_in = f.flat.contains(bij.image(i));
        // An image inside F forces its preimage inside F.
        if (image_in && !source_in) {
            throw InternalConsistency("exchange bijection maps " + std::to_string(bij.source[i]) +
                                      " outside the flat to " + std::to_string(bij.image(i)) +
                                      " inside it");
        }
        if (source_in && !image_in) ++count;
    }
    return count;
}

}  // namespace matroid_xf
