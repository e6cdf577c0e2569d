#pragma once

// Graph-metric distances on the torus grid graph.
//
// The parallel kernel is a separable min-plus (l1) distance transform: one
// cyclic two-sweep pass per axis, with independent lines distributed over
// OpenMP threads. The serial reference is a plain multi-source BFS; the two are
// compared in tests and in bench/. The BFS also serves small capped fields.

#include "polychrome/torus.hpp"
#include "polychrome/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polychrome {

/// Marks vertices farther than the field's cap.
inline constexpr std::uint16_t kFar = 0xFFFF;
/// Source label of a vertex farther than the cap.
inline constexpr std::uint16_t kNoSource = 0xFFFF;
inline constexpr int kMaxDistanceCap = 0xFFFE;

/// Distance from every vertex to the union of a list of source groups, plus the
/// index of a nearest group. Distances above `cap` are stored as kFar. When two
/// groups are equally near the label is one of them, unspecified which.
struct DistanceField {
    int cap = 0;
    std::vector<std::uint16_t> dist;
    std::vector<std::uint16_t> source;

    bool within(Index v, int radius) const noexcept {
        return dist[static_cast<std::size_t>(v)] <= radius;
    }
};

/// `cap < 0` means "exact everywhere", which needs diameter <= kMaxDistanceCap.
/// Capped fields around few sources go to the BFS, everything else to the
/// parallel transform.
DistanceField distance_field(const Torus& domain, std::span<const VertexSet> groups, int cap = -1);
/// The parallel separable transform, always.
DistanceField separable_distance_field(const Torus& domain, std::span<const VertexSet> groups, int cap = -1);
DistanceField distance_field(const Torus& domain, const VertexSet& sources, int cap = -1);

/// Distance from x to the nearest member of A. Throws on empty A.
std::int64_t graph_dist(const VertexSet& A, Index x);

/// B_r(A). Throws on empty A.
VertexSet ball(const VertexSet& A, int r);

namespace serial {

DistanceField distance_field_bfs(const Torus& domain, std::span<const VertexSet> groups, int cap = -1);

}  // namespace serial

}  // namespace polychrome
