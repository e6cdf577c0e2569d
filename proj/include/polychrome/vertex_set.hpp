#pragma once

#include "polychrome/torus.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polychrome {

/// Inclusive axis-aligned box, lo <= hi on every axis, no wrap-around.
struct Box {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;

    bool operator==(const Box&) const = default;
};

/// Dense membership bitmap over a torus.
class VertexSet {
public:
    explicit VertexSet(const Torus& domain);

    static VertexSet full(const Torus& domain);
    static VertexSet from_box(const Torus& domain, const Box& box);
    static VertexSet from_indices(const Torus& domain, const std::vector<Index>& members);

    const Torus& domain() const noexcept { return domain_; }

    bool contains(Index v) const noexcept {
        return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }
    void insert(Index v) noexcept { words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
    void erase(Index v) noexcept { words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

    Index count() const noexcept;
    bool empty() const noexcept;
    bool is_full() const noexcept;

    /// Smallest member index, which is the lexicographically least vertex.
    std::optional<Index> first() const noexcept;
    std::optional<Index> last() const noexcept;
    std::vector<Index> members() const;

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator&=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;

    bool operator==(const VertexSet& other) const noexcept { return words_ == other.words_; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

private:
    void trim() noexcept;

    Torus domain_;
    std::vector<std::uint64_t> words_;
};

/// Torus distance between two boxes (sum of per-axis cyclic gaps).
std::int64_t box_distance(const Torus& domain, const Box& a, const Box& b);

}  // namespace polychrome
