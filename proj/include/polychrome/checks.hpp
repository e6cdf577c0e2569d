#pragma once

// Locally checkable predicates on labelings. Every cube-scanning kernel has an
// OpenMP version (default) and a serial reference in `serial::`.

#include "polychrome/labeling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polychrome {

struct CubeCheck {
    bool ok = true;
    /// Base vertex of the first failing cube in index order.
    std::optional<Index> witness;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Every cube {0,1}^d . x sees all colours 0..k-1.
CubeCheck is_polychromatic(const Labeling& c, int k);

/// c is injective on every cube.
CubeCheck is_cube_injective(const Labeling& c);

/// c(x + e_axis) != c(x) for all x.
bool is_proper_2_coloring(const Labeling& c, int axis);

/// c(x + g) == c(x) for all x.
bool is_invariant(const Labeling& c, const Shift& g);

/// Set of colours (as a bitmask) seen on the cube based at x.
std::uint64_t cube_color_mask(const Labeling& c, Index base);

namespace serial {

CubeCheck is_polychromatic(const Labeling& c, int k);

}  // namespace serial

}  // namespace polychrome
