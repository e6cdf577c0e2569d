#pragma once

// Finite even-sided torus standing in for one orbit of a free Z^d action.
//
// Vertices are addressed by a row-major flat index (last coordinate fastest),
// so index order coincides with lexicographic order on coordinates.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace polychrome {

using Index = std::int64_t;

inline constexpr int kMaxDim = 6;

/// Coordinates of a vertex; only the first `dim()` entries are meaningful.
using Vertex = std::vector<std::int64_t>;

/// Integer displacement in Z^d.
using Shift = std::vector<std::int64_t>;

/// Bit i of a cube offset is the coefficient of e_i.
using CubeOffset = std::uint32_t;

class Torus {
public:
    /// Every side must be even and at least 4; 1 <= d <= kMaxDim.
    explicit Torus(std::vector<std::int64_t> sides);

    int dim() const noexcept { return static_cast<int>(sides_.size()); }
    const std::vector<std::int64_t>& sides() const noexcept { return sides_; }
    std::int64_t side(int axis) const { return sides_[static_cast<std::size_t>(axis)]; }
    std::int64_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
    Index size() const noexcept { return size_; }

    /// 2^d, the number of vertices of a unit cube.
    int cube_size() const noexcept { return 1 << dim(); }

    /// Largest possible graph distance between two vertices.
    std::int64_t diameter() const noexcept;

    Vertex coords(Index v) const;
    std::int64_t coord(Index v, int axis) const {
        return (v / stride(axis)) % side(axis);
    }
    /// Reduces each coordinate modulo its side, so any integer vector is accepted.
    Index index(std::span<const std::int64_t> coords) const;

    /// Group action of g in Z^d.
    Index act(Index v, std::span<const std::int64_t> g) const;
    /// v + delta * e_axis.
    Index step(Index v, int axis, std::int64_t delta) const;

    /// Vertices {0,1}^d . v, ordered by the d-bit counter epsilon.
    std::vector<Index> cube_at(Index base) const;

    /// Flat-index offsets of the +e_i neighbour of `base`, wrap-aware.
    /// Cube vertex eps equals base + sum of offsets[i] over the set bits of eps.
    std::array<Index, kMaxDim> unit_offsets(Index base) const;

    /// Hop distance in the grid graph (l1 with wrap-around).
    std::int64_t distance(Index a, Index b) const;

    bool operator==(const Torus& other) const noexcept { return sides_ == other.sides_; }

    std::string describe() const;  // e.g. "512x512"

private:
    std::vector<std::int64_t> sides_;
    std::vector<std::int64_t> strides_;
    Index size_ = 0;
};

/// Parses "512x512" style side lists.
std::vector<std::int64_t> parse_sides(const std::string& text);

/// e_axis scaled by `amount`, in dimension d.
Shift unit_shift(int d, int axis, std::int64_t amount = 1);

}  // namespace polychrome
