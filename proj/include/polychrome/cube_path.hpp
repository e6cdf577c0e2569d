#pragma once

// Reconfiguration of surjective (2^d - 1)-colourings of the unit d-cube by
// single-vertex recolourings.

#include "polychrome/labeling.hpp"

#include <cstdint>
#include <vector>

namespace polychrome {

/// A colouring of {0,1}^d; values[eps] is the colour of cube vertex eps
/// (bit i of eps = coefficient of e_i). Colours lie in [0, 2^d - 1).
struct CubeLabeling {
    int d = 0;
    std::vector<Color> values;

    CubeLabeling() = default;
    CubeLabeling(int dim, std::vector<Color> vals);

    int vertex_count() const noexcept { return 1 << d; }
    int color_count() const noexcept { return (1 << d) - 1; }
    Color operator[](std::size_t eps) const noexcept { return values[eps]; }

    bool operator==(const CubeLabeling&) const = default;
};

using LabelingPath = std::vector<CubeLabeling>;

bool is_surjective(const CubeLabeling& c);

/// Number of cube vertices on which a and b differ.
int hamming(const CubeLabeling& a, const CubeLabeling& b);

/// The full constructive sequence c_0 .. c_{2^{d+1}} together with the vertex
/// enumeration it used, kept for invariant checking.
struct ConnectTrace {
    std::vector<int> order;  // order[j] = cube vertex v_j
    std::vector<CubeLabeling> steps;
};

/// Raw two-moves-per-vertex sequence: 2^{d+1} + 1 labelings, c_{2i} agrees
/// with cB on v_0 .. v_{i-1}.
ConnectTrace connect_trace(const CubeLabeling& cA, const CubeLabeling& cB);

/// connect_trace with no-op moves dropped and any revisited labeling spliced
/// out. Starts at cA, ends at cB, at most 2^{d+1} single-vertex steps.
LabelingPath connect(const CubeLabeling& cA, const CubeLabeling& cB);

/// Shortest path in the graph of surjective labelings (edges = one-vertex
/// recolourings). Exhaustive; restricted to d <= 3.
LabelingPath bfs_shortest_path(const CubeLabeling& cA, const CubeLabeling& cB);

/// Every surjective labeling of the d-cube in lexicographic order of values.
/// Restricted to d <= 3.
std::vector<CubeLabeling> all_surjective(int d);

/// Checks the LabelingPath invariants against the given endpoints; returns an
/// empty string when the path is valid, otherwise the first problem found.
std::string path_problem(const LabelingPath& path, const CubeLabeling& from, const CubeLabeling& to);

}  // namespace polychrome
