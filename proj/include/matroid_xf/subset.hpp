#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroid_xf {

/// Largest ground set a rank oracle can address.
inline constexpr int kMaxGroundSize = 64;

/// A set of ground-set elements stored as a 64-bit mask.
class Subset {
  public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t mask) : mask_(mask) {}
    Subset(std::initializer_list<int> elements) {
        for (int e : elements) insert(e);
    }

    static Subset of(const std::vector<int>& elements) {
        Subset s;
        for (int e : elements) s.insert(e);
        return s;
    }
    /// {0, ..., n-1}.
    static constexpr Subset full(int n) {
        return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr Subset singleton(int e) { return Subset(std::uint64_t{1} << e); }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int e) const { return (mask_ >> e) & 1U; }
    constexpr bool is_subset_of(Subset other) const { return (mask_ & ~other.mask_) == 0; }
    /// Largest element index plus one; 0 for the empty set.
    constexpr int span() const { return 64 - std::countl_zero(mask_); }

    void insert(int e) { mask_ |= std::uint64_t{1} << e; }
    void erase(int e) { mask_ &= ~(std::uint64_t{1} << e); }
    constexpr Subset with(int e) const { return Subset(mask_ | (std::uint64_t{1} << e)); }
    constexpr Subset without(int e) const { return Subset(mask_ & ~(std::uint64_t{1} << e)); }

    /// Elements in increasing order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.mask_ | b.mask_); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.mask_ & b.mask_); }
    /// Set difference.
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(Subset a, Subset b) = default;

  private:
    std::uint64_t mask_ = 0;
};

/// Lexicographic order on the sorted element lists ({0} < {0,1} < {1}).
inline bool lex_less(Subset a, Subset b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return ea < eb;
}

/// Elements joined by `sep`, e.g. "0-3-5".
inline std::string to_label(Subset s, char sep = '-') {
    std::string out;
    for (int e : s.elements()) {
        if (!out.empty()) out.push_back(sep);
        out += std::to_string(e);
    }
    return out;
}

}  // namespace matroid_xf
