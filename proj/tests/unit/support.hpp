#pragma once

// Naive reference implementations used as oracles, plus small helpers.

#include "polychrome/labeling.hpp"
#include "polychrome/vertex_set.hpp"

#include <cstdint>
#include <deque>
#include <unistd.h>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace polychrome;

inline std::string fixture(const std::string& name) { return std::string(POLYCHROME_FIXTURE_DIR) + "/" + name; }

// Cube members computed from coordinates, independent of Torus::cube_at.
inline std::vector<Index> naive_cube(const Torus& t, Index base) {
    const Vertex x = t.coords(base);
    std::vector<Index> out;
    for (int eps = 0; eps < (1 << t.dim()); ++eps) {
        Vertex y = x;
        for (int i = 0; i < t.dim(); ++i)
            if (eps >> i & 1) y[static_cast<std::size_t>(i)] = (y[static_cast<std::size_t>(i)] + 1) % t.side(i);
        out.push_back(t.index(y));
    }
    return out;
}

inline bool naive_polychromatic(const Labeling& c, int k) {
    const auto& t = c.domain();
    for (Index v = 0; v < t.size(); ++v) {
        std::set<int> seen;
        for (Index w : naive_cube(t, v)) seen.insert(c[w]);
        for (int col = 0; col < k; ++col)
            if (!seen.count(col)) return false;
    }
    return true;
}

// Multi-source BFS over explicit neighbour lists.
inline std::vector<std::int64_t> naive_bfs(const Torus& t, const std::vector<Index>& sources) {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(t.size()), -1);
    std::deque<Index> q;
    for (Index s : sources) {
        dist[static_cast<std::size_t>(s)] = 0;
        q.push_back(s);
    }
    while (!q.empty()) {
        const Index v = q.front();
        q.pop_front();
        const Vertex x = t.coords(v);
        for (int i = 0; i < t.dim(); ++i)
            for (int delta : {-1, 1}) {
                Vertex y = x;
                auto& yi = y[static_cast<std::size_t>(i)];
                yi = (yi + delta + t.side(i)) % t.side(i);
                const Index w = t.index(y);
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push_back(w);
                }
            }
    }
    return dist;
}

inline Labeling random_labeling(const Torus& t, int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    std::vector<Color> data(static_cast<std::size_t>(t.size()));
    for (auto& x : data) x = static_cast<Color>(pick(rng));
    return Labeling(t, k, std::move(data));
}

// Period-2 four-colour pattern: colour (x0 mod 2) + 2 (x1 mod 2).
inline Labeling figure1(const Torus& t) {
    Labeling c(t, 4);
    for (Index v = 0; v < t.size(); ++v) c[v] = static_cast<Color>(t.coord(v, 0) % 2 + 2 * (t.coord(v, 1) % 2));
    return c;
}

// Proper 2-colouring in direction `axis`, constant along the others.
inline Labeling stripes(const Torus& t, int axis) {
    Labeling c(t, 2);
    for (Index v = 0; v < t.size(); ++v) c[v] = static_cast<Color>(t.coord(v, axis) % 2);
    return c;
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("polychrome_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace testing
