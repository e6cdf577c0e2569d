#include "polychrome/checks.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace polychrome {

namespace {

std::uint64_t full_mask(int k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

std::string describe_cube(const Labeling& c, Index base) {
    const auto& domain = c.domain();
    std::string out = "cube at (";
    const auto x = domain.coords(base);
    for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
    out += ") has colours [";
    const auto cube = domain.cube_at(base);
    for (std::size_t i = 0; i < cube.size(); ++i) out += (i ? "," : "") + std::to_string(c[cube[i]]);
    return out + "]";
}

// Walks every cube once, one line along the last axis at a time. `visit`
// receives the base index and the 2^d cube vertex indices; it returns true when
// the cube fails. Returns the smallest failing base, or -1.
template <class Visit>
Index scan_cubes(const Torus& domain, Visit visit) {
    const int d = domain.dim();
    const int corners = domain.cube_size();
    const int last = d - 1;
    const std::int64_t n = domain.side(last);
    const std::int64_t lines = domain.size() / n;
    const CubeOffset last_bit = CubeOffset{1} << last;
    Index first_bad = std::numeric_limits<Index>::max();

#pragma omp parallel
    {
        std::array<Index, 1 << kMaxDim> rel{};
        std::array<Index, 1 << kMaxDim> cube{};
#pragma omp for schedule(static) reduction(min : first_bad)
        for (std::int64_t line = 0; line < lines; ++line) {
            const Index row = line * n;
            const auto off = domain.unit_offsets(row);
            for (int eps = 0; eps < corners; ++eps) {
                Index r = 0;
                for (int i = 0; i < last; ++i)
                    if (eps >> i & 1) r += off[static_cast<std::size_t>(i)];
                rel[static_cast<std::size_t>(eps)] = r;
            }
            for (std::int64_t j = 0; j < n; ++j) {
                const Index base = row + j;
                const Index step_last = j == n - 1 ? -(n - 1) : 1;
                for (int eps = 0; eps < corners; ++eps)
                    cube[static_cast<std::size_t>(eps)] = base + rel[static_cast<std::size_t>(eps)] +
                                                          (static_cast<CubeOffset>(eps) & last_bit ? step_last : 0);
                if (base < first_bad && visit(base, std::span<const Index>(cube.data(), static_cast<std::size_t>(corners))))
                    first_bad = base;
            }
        }
    }
    return first_bad == std::numeric_limits<Index>::max() ? -1 : first_bad;
}

CubeCheck result_from(const Labeling& c, Index bad, const std::string& what) {
    CubeCheck out;
    if (bad >= 0) {
        out.ok = false;
        out.witness = bad;
        out.diagnostic = what + ": " + describe_cube(c, bad);
    }
    return out;
}

CubeCheck too_many_colors(int k, int d) {
    CubeCheck out;
    out.ok = false;
    out.diagnostic = "k=" + std::to_string(k) + " exceeds the 2^d=" + std::to_string(1 << d) +
                     " vertices of a cube; no labeling can be k-polychromatic";
    return out;
}

}  // namespace

std::uint64_t cube_color_mask(const Labeling& c, Index base) {
    std::uint64_t mask = 0;
    for (Index v : c.domain().cube_at(base)) mask |= std::uint64_t{1} << c[v];
    return mask;
}

CubeCheck is_polychromatic(const Labeling& c, int k) {
    require(k >= 1, "is_polychromatic: k must be positive");
    const int d = c.domain().dim();
    if (k > (1 << d)) return too_many_colors(k, d);
    const std::uint64_t want = full_mask(k);
    const Index bad = scan_cubes(c.domain(), [&](Index, std::span<const Index> cube) {
        std::uint64_t mask = 0;
        for (Index v : cube) mask |= std::uint64_t{1} << c[v];
        return (mask & want) != want;
    });
    return result_from(c, bad, "missing colour");
}

CubeCheck is_cube_injective(const Labeling& c) {
    const int corners = c.domain().cube_size();
    const Index bad = scan_cubes(c.domain(), [&](Index, std::span<const Index> cube) {
        std::uint64_t mask = 0;
        for (Index v : cube) mask |= std::uint64_t{1} << c[v];
        return std::popcount(mask) != corners;
    });
    return result_from(c, bad, "repeated colour");
}

bool is_proper_2_coloring(const Labeling& c, int axis) {
    const auto& domain = c.domain();
    require(axis >= 0 && axis < domain.dim(), "generator index out of range");
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (Index v = 0; v < domain.size(); ++v) ok = ok && c[domain.step(v, axis, 1)] != c[v];
    return ok;
}

bool is_invariant(const Labeling& c, const Shift& g) {
    const auto& domain = c.domain();
    require(static_cast<int>(g.size()) == domain.dim(), "shift has wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; })) return true;
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (Index v = 0; v < domain.size(); ++v) ok = ok && c[domain.act(v, g)] == c[v];
    return ok;
}

namespace serial {

CubeCheck is_polychromatic(const Labeling& c, int k) {
    require(k >= 1, "is_polychromatic: k must be positive");
    const auto& domain = c.domain();
    if (k > domain.cube_size()) return too_many_colors(k, domain.dim());
    const std::uint64_t want = full_mask(k);
    for (Index base = 0; base < domain.size(); ++base)
        if ((cube_color_mask(c, base) & want) != want) return result_from(c, base, "missing colour");
    return {};
}

}  // namespace serial

}  // namespace polychrome
