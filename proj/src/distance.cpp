#include "polychrome/distance.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace polychrome {

namespace {

int resolve_cap(const Torus& domain, int cap) {
    if (cap < 0) {
        require(domain.diameter() <= kMaxDistanceCap,
                "torus " + domain.describe() + " is too large for an exact distance field");
        return static_cast<int>(domain.diameter());
    }
    require(cap <= kMaxDistanceCap, "distance cap exceeds " + std::to_string(kMaxDistanceCap));
    return cap;
}

void check_groups(const Torus& domain, std::span<const VertexSet> groups) {
    require(groups.size() < kNoSource, "too many source groups");
    for (const auto& g : groups) require(g.domain() == domain, "source set lives on a different torus");
}

// Lines along `axis` are bundled `width` at a time over consecutive inner
// indices, so strided axes still read contiguous memory.
constexpr std::int64_t kBundle = 64;

void transform_axis(const Torus& domain, int axis, int cap, DistanceField& field) {
    constexpr std::int32_t inf = std::numeric_limits<std::int32_t>::max() / 2;
    const std::int64_t n = domain.side(axis);
    const std::int64_t st = domain.stride(axis);
    const std::int64_t outer_count = domain.size() / (n * st);
    const std::int64_t bundles_per_outer = (st + kBundle - 1) / kBundle;
    const std::int64_t bundles = outer_count * bundles_per_outer;

#pragma omp parallel
    {
        std::vector<std::int32_t> g(static_cast<std::size_t>(n * kBundle));
        std::vector<std::uint16_t> lab(static_cast<std::size_t>(n * kBundle));

#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < bundles; ++b) {
            const std::int64_t outer = b / bundles_per_outer;
            const std::int64_t inner0 = (b % bundles_per_outer) * kBundle;
            const std::int64_t width = std::min(kBundle, st - inner0);
            const Index base = outer * n * st + inner0;

            for (std::int64_t j = 0; j < n; ++j) {
                const Index row = base + j * st;
                for (std::int64_t w = 0; w < width; ++w) {
                    const auto at = static_cast<std::size_t>(row + w);
                    const auto slot = static_cast<std::size_t>(j * kBundle + w);
                    const std::uint16_t d = field.dist[at];
                    g[slot] = d == kFar ? inf : d;
                    lab[slot] = field.source[at];
                }
            }
            // Two laps each way cover every cyclic shortest path.
            auto relax = [&](std::int64_t to, std::int64_t from) {
                const auto t = static_cast<std::size_t>(to * kBundle);
                const auto f = static_cast<std::size_t>(from * kBundle);
                for (std::int64_t w = 0; w < width; ++w) {
                    const std::int32_t cand = g[f + static_cast<std::size_t>(w)] + 1;
                    if (cand < g[t + static_cast<std::size_t>(w)]) {
                        g[t + static_cast<std::size_t>(w)] = cand;
                        lab[t + static_cast<std::size_t>(w)] = lab[f + static_cast<std::size_t>(w)];
                    }
                }
            };
            for (std::int64_t s = 1; s < 2 * n; ++s) relax(s % n, (s - 1) % n);
            for (std::int64_t s = 2 * n - 2; s >= 0; --s) relax(s % n, (s + 1) % n);

            for (std::int64_t j = 0; j < n; ++j) {
                const Index row = base + j * st;
                for (std::int64_t w = 0; w < width; ++w) {
                    const auto at = static_cast<std::size_t>(row + w);
                    const auto slot = static_cast<std::size_t>(j * kBundle + w);
                    if (g[slot] > cap) {
                        field.dist[at] = kFar;
                        field.source[at] = kNoSource;
                    } else {
                        field.dist[at] = static_cast<std::uint16_t>(g[slot]);
                        field.source[at] = lab[slot];
                    }
                }
            }
        }
    }
}

// Lattice points within l1 distance r of the origin in Z^d.
double l1_ball_volume(int d, int r) {
    double total = 0, choose_d = 1, choose_r = 1;
    for (int k = 0; k <= std::min(d, r); ++k) {
        if (k > 0) {
            choose_d = choose_d * (d - k + 1) / k;
            choose_r = choose_r * (r - k + 1) / k;
        }
        total += std::ldexp(choose_d * choose_r, k);
    }
    return total;
}

// Upper bound on |B_cap(A)|: the smaller of |A| balls and the bounding box of A
// grown by cap on every side.
double ball_size_bound(const VertexSet& A, int cap) {
    const Torus& domain = A.domain();
    const int d = domain.dim();
    std::vector<std::int64_t> lo(static_cast<std::size_t>(d), std::numeric_limits<std::int64_t>::max());
    std::vector<std::int64_t> hi(static_cast<std::size_t>(d), -1);
    A.for_each([&](Index v) {
        for (int i = 0; i < d; ++i) {
            const auto k = static_cast<std::size_t>(i);
            const auto x = domain.coord(v, i);
            lo[k] = std::min(lo[k], x);
            hi[k] = std::max(hi[k], x);
        }
    });
    if (hi[0] < 0) return 0;
    double box = 1;
    for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        box *= static_cast<double>(std::min(hi[k] - lo[k] + 1 + 2 * static_cast<std::int64_t>(cap), domain.side(i)));
    }
    return std::min(box, static_cast<double>(A.count()) * l1_ball_volume(d, cap));
}

}  // namespace

DistanceField distance_field(const Torus& domain, std::span<const VertexSet> groups, int cap) {
    if (cap >= 0) {
        // A capped field around few sources touches a small ball; a BFS visits
        // only that, while the transform always sweeps the whole torus.
        double visits = 0;
        for (const auto& g : groups) visits += ball_size_bound(g, cap);
        if (visits <= static_cast<double>(domain.size()) / 8)
            return serial::distance_field_bfs(domain, groups, cap);
    }
    return separable_distance_field(domain, groups, cap);
}

DistanceField separable_distance_field(const Torus& domain, std::span<const VertexSet> groups, int cap) {
    check_groups(domain, groups);
    DistanceField field;
    field.cap = resolve_cap(domain, cap);
    field.dist.assign(static_cast<std::size_t>(domain.size()), kFar);
    field.source.assign(static_cast<std::size_t>(domain.size()), kNoSource);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        groups[gi].for_each([&](Index v) {
            const auto at = static_cast<std::size_t>(v);
            if (field.dist[at] != 0) {
                field.dist[at] = 0;
                field.source[at] = static_cast<std::uint16_t>(gi);
            }
        });
    }
    for (int axis = 0; axis < domain.dim(); ++axis) transform_axis(domain, axis, field.cap, field);
    return field;
}

DistanceField distance_field(const Torus& domain, const VertexSet& sources, int cap) {
    return distance_field(domain, std::span<const VertexSet>(&sources, 1), cap);
}

std::int64_t graph_dist(const VertexSet& A, Index x) {
    require(!A.empty(), "graph_dist: source set is empty");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    A.for_each([&](Index a) { best = std::min(best, A.domain().distance(a, x)); });
    return best;
}

VertexSet ball(const VertexSet& A, int r) {
    require(!A.empty(), "ball: source set is empty");
    require(r >= 0, "ball: negative radius");
    const Torus& domain = A.domain();
    if (r >= domain.diameter()) return VertexSet::full(domain);
    const auto field = distance_field(domain, A, r);
    VertexSet out(domain);
    for (Index v = 0; v < domain.size(); ++v)
        if (field.dist[static_cast<std::size_t>(v)] != kFar) out.insert(v);
    return out;
}

namespace serial {

DistanceField distance_field_bfs(const Torus& domain, std::span<const VertexSet> groups, int cap) {
    check_groups(domain, groups);
    DistanceField field;
    field.cap = resolve_cap(domain, cap);
    field.dist.assign(static_cast<std::size_t>(domain.size()), kFar);
    field.source.assign(static_cast<std::size_t>(domain.size()), kNoSource);
    std::deque<Index> queue;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        groups[gi].for_each([&](Index v) {
            const auto at = static_cast<std::size_t>(v);
            if (field.dist[at] == kFar) {
                field.dist[at] = 0;
                field.source[at] = static_cast<std::uint16_t>(gi);
                queue.push_back(v);
            }
        });
    }
    while (!queue.empty()) {
        const Index v = queue.front();
        queue.pop_front();
        const auto dv = field.dist[static_cast<std::size_t>(v)];
        if (dv >= field.cap) continue;
        for (int axis = 0; axis < domain.dim(); ++axis) {
            for (std::int64_t delta : {-1, 1}) {
                const auto u = static_cast<std::size_t>(domain.step(v, axis, delta));
                if (field.dist[u] == kFar) {
                    field.dist[u] = static_cast<std::uint16_t>(dv + 1);
                    field.source[u] = field.source[static_cast<std::size_t>(v)];
                    queue.push_back(static_cast<Index>(u));
                }
            }
        }
    }
    return field;
}

}  // namespace serial

}  // namespace polychrome
