#include "polychrome/vertex_set.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <bit>

namespace polychrome {

VertexSet::VertexSet(const Torus& domain)
    : domain_(domain), words_(static_cast<std::size_t>((domain.size() + 63) / 64), 0) {}

VertexSet VertexSet::full(const Torus& domain) {
    VertexSet s(domain);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

VertexSet VertexSet::from_box(const Torus& domain, const Box& box) {
    const int d = domain.dim();
    require(static_cast<int>(box.lo.size()) == d && static_cast<int>(box.hi.size()) == d,
            "box has wrong dimension");
    for (int i = 0; i < d; ++i) {
        const auto lo = box.lo[static_cast<std::size_t>(i)];
        const auto hi = box.hi[static_cast<std::size_t>(i)];
        require(0 <= lo && lo <= hi && hi < domain.side(i),
                "box bounds [" + std::to_string(lo) + "," + std::to_string(hi) + "] invalid on axis " +
                    std::to_string(i));
    }
    VertexSet s(domain);
    // Walk the box row by row along the last axis.
    std::vector<std::int64_t> c(box.lo);
    const std::int64_t run = box.hi.back() - box.lo.back() + 1;
    while (true) {
        const Index start = domain.index(c);
        for (std::int64_t j = 0; j < run; ++j) s.insert(start + j);
        int axis = d - 2;
        while (axis >= 0) {
            auto& x = c[static_cast<std::size_t>(axis)];
            if (x < box.hi[static_cast<std::size_t>(axis)]) {
                ++x;
                break;
            }
            x = box.lo[static_cast<std::size_t>(axis)];
            --axis;
        }
        if (axis < 0) break;
    }
    return s;
}

VertexSet VertexSet::from_indices(const Torus& domain, const std::vector<Index>& members) {
    VertexSet s(domain);
    for (Index v : members) {
        require(v >= 0 && v < domain.size(), "vertex index out of range");
        s.insert(v);
    }
    return s;
}

void VertexSet::trim() noexcept {
    const Index tail = domain_.size() & 63;
    if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

Index VertexSet::count() const noexcept {
    Index total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::is_full() const noexcept { return count() == domain_.size(); }

std::optional<Index> VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Index>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return std::nullopt;
}

std::optional<Index> VertexSet::last() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w]) return static_cast<Index>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    return std::nullopt;
}

std::vector<Index> VertexSet::members() const {
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Index v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

std::int64_t box_distance(const Torus& domain, const Box& a, const Box& b) {
    std::int64_t total = 0;
    for (int i = 0; i < domain.dim(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const std::int64_t n = domain.side(i);
        if (a.hi[k] >= b.lo[k] && b.hi[k] >= a.lo[k]) continue;  // overlap on this axis
        // Cyclic gap going up from a to b, and from b to a.
        const std::int64_t up = ((b.lo[k] - a.hi[k]) % n + n) % n;
        const std::int64_t down = ((a.lo[k] - b.hi[k]) % n + n) % n;
        total += std::min(up, down);
    }
    return total;
}

}  // namespace polychrome
