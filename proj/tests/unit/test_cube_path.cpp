#include "polychrome/cube_path.hpp"
#include "polychrome/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace polychrome;

namespace {

// Brute-force listing of surjective labelings, independent of all_surjective.
std::vector<std::vector<Color>> brute_surjective(int d) {
    const int n = 1 << d, k = n - 1;
    std::vector<std::vector<Color>> out;
    std::vector<Color> v(static_cast<std::size_t>(n), 0);
    while (true) {
        std::set<Color> image(v.begin(), v.end());
        if (static_cast<int>(image.size()) == k) out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == k - 1) v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++v[static_cast<std::size_t>(i)];
    }
    return out;
}

CubeLabeling random_surjective(int d, std::mt19937_64& rng) {
    const int n = 1 << d, k = n - 1;
    std::vector<Color> v(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = static_cast<Color>(i);
    v[static_cast<std::size_t>(k)] = static_cast<Color>(std::uniform_int_distribution<int>(0, k - 1)(rng));
    std::shuffle(v.begin(), v.end(), rng);
    return CubeLabeling(d, v);
}

}  // namespace

TEST_CASE("is_surjective examples") {
    CHECK(is_surjective(CubeLabeling(2, {0, 1, 2, 0})));
    CHECK_FALSE(is_surjective(CubeLabeling(2, {0, 1, 0, 1})));
    CHECK(is_surjective(CubeLabeling(1, {0, 0})));
}

TEST_CASE("cube labeling validation") {
    CHECK_THROWS_AS(CubeLabeling(2, {0, 1, 2}), Error);
    CHECK_THROWS_AS(CubeLabeling(2, {0, 1, 3, 0}), Error);
    CHECK_THROWS_AS(CubeLabeling(0, {0}), Error);
}

TEST_CASE("there are 36 surjective labelings of the square") {
    const auto brute = brute_surjective(2);
    CHECK(brute.size() == 36);
    const auto all = all_surjective(2);
    REQUIRE(all.size() == brute.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].values == brute[i]);
    CHECK(all_surjective(1).size() == 1);
    CHECK(all_surjective(3).size() == brute_surjective(3).size());
}

TEST_CASE("connect with equal endpoints is a single labeling") {
    for (int d = 1; d <= 4; ++d) {
        std::mt19937_64 rng(static_cast<unsigned>(d));
        const auto a = random_surjective(d, rng);
        const auto path = connect(a, a);
        REQUIRE(path.size() == 1);
        CHECK(path[0] == a);
        if (d <= 3) CHECK(bfs_shortest_path(a, a).size() == 1);
    }
}

TEST_CASE("connect between two fixed labelings") {
    const CubeLabeling a(2, {0, 1, 2, 0}), b(2, {2, 0, 1, 1});
    const auto path = connect(a, b);
    CHECK(path_problem(path, a, b).empty());
    CHECK(path.size() <= 9);
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    for (const auto& c : path) CHECK(is_surjective(c));
    for (std::size_t i = 1; i < path.size(); ++i) CHECK(hamming(path[i - 1], path[i]) == 1);
}

TEST_CASE("raw trace keeps the inductive invariant") {
    std::mt19937_64 rng(99);
    for (int d = 1; d <= 5; ++d) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_surjective(d, rng), b = random_surjective(d, rng);
            const auto trace = connect_trace(a, b);
            const int n = 1 << d;
            REQUIRE(trace.steps.size() == static_cast<std::size_t>(2 * n + 1));
            REQUIRE(trace.order.size() == static_cast<std::size_t>(n));
            CHECK(std::set<int>(trace.order.begin(), trace.order.end()).size() == static_cast<std::size_t>(n));
            // The last enumerated vertex carries a colour repeated in b.
            const int last = trace.order.back();
            CHECK(std::count(b.values.begin(), b.values.end(), b[static_cast<std::size_t>(last)]) >= 2);
            CHECK(trace.steps.front() == a);
            CHECK(trace.steps.back() == b);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j < i; ++j) {
                    const auto v = static_cast<std::size_t>(trace.order[static_cast<std::size_t>(j)]);
                    CHECK(trace.steps[static_cast<std::size_t>(2 * i)][v] == b[v]);
                }
            for (std::size_t s = 0; s < trace.steps.size(); ++s) {
                CHECK(is_surjective(trace.steps[s]));
                if (s) CHECK(hamming(trace.steps[s - 1], trace.steps[s]) <= 1);
            }
        }
    }
}

TEST_CASE("connect is exhaustively valid for d=2 and never beats BFS") {
    const auto all = all_surjective(2);
    int worst = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            const auto path = connect(a, b);
            REQUIRE(path_problem(path, a, b).empty());
            const auto best = bfs_shortest_path(a, b);
            REQUIRE(path_problem(best, a, b).empty());
            CHECK(path.size() >= best.size());
            worst = std::max(worst, static_cast<int>(best.size()) - 1);
        }
    CHECK(worst <= 8);
}

TEST_CASE("the surjective labeling graph of the square is connected") {
    const auto all = all_surjective(2);
    for (const auto& b : all) CHECK_FALSE(bfs_shortest_path(all.front(), b).empty());
}

TEST_CASE("BFS distances match an independent breadth-first search") {
    // Independent oracle: BFS over the explicit 36-node graph.
    const auto all = brute_surjective(2);
    std::map<std::vector<Color>, int> id;
    for (std::size_t i = 0; i < all.size(); ++i) id[all[i]] = static_cast<int>(i);
    for (std::size_t s = 0; s < all.size(); ++s) {
        std::vector<int> dist(all.size(), -1);
        std::vector<std::size_t> queue{s};
        dist[s] = 0;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const auto& u = all[queue[q]];
            for (std::size_t v = 0; v < 4; ++v)
                for (Color col = 0; col < 3; ++col) {
                    auto w = u;
                    w[v] = col;
                    auto it = id.find(w);
                    if (it != id.end() && dist[static_cast<std::size_t>(it->second)] < 0) {
                        dist[static_cast<std::size_t>(it->second)] = dist[queue[q]] + 1;
                        queue.push_back(static_cast<std::size_t>(it->second));
                    }
                }
        }
        for (std::size_t t = 0; t < all.size(); ++t)
            CHECK(static_cast<int>(bfs_shortest_path(CubeLabeling(2, all[s]), CubeLabeling(2, all[t])).size()) - 1 ==
                  dist[t]);
    }
}

TEST_CASE("connect at d=3 and d=4 stays within 2^{d+1} steps") {
    std::mt19937_64 rng(4242);
    for (int d : {3, 4, 5, 6}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto a = random_surjective(d, rng), b = random_surjective(d, rng);
            const auto path = connect(a, b);
            CHECK(path_problem(path, a, b).empty());
            CHECK(path.size() <= static_cast<std::size_t>((2 << d) + 1));
        }
    }
}

TEST_CASE("d=1 has a single surjective labeling") {
    const CubeLabeling a(1, {0, 0});
    CHECK(connect(a, a).size() == 1);
    CHECK(bfs_shortest_path(a, a).size() == 1);
}

TEST_CASE("connect rejects bad input") {
    const CubeLabeling good(2, {0, 1, 2, 0}), bad(2, {0, 1, 0, 1}), other(3, {0, 1, 2, 3, 4, 5, 6, 0});
    CHECK_THROWS_AS(connect(good, bad), Error);
    CHECK_THROWS_AS(connect(bad, good), Error);
    CHECK_THROWS_AS(connect(good, other), Error);
    CHECK_THROWS_AS(bfs_shortest_path(good, bad), Error);
    const CubeLabeling d4(4, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0});
    CHECK_THROWS_AS(bfs_shortest_path(d4, d4), Error);
}

TEST_CASE("path_problem reports defects") {
    const CubeLabeling a(2, {0, 1, 2, 0}), b(2, {0, 1, 2, 1}), c(2, {1, 0, 2, 1});
    CHECK(path_problem({a, b}, a, b).empty());
    CHECK_FALSE(path_problem({a, c}, a, c).empty());           // two changes at once
    CHECK_FALSE(path_problem({a}, a, b).empty());              // wrong end
    CHECK_FALSE(path_problem({}, a, a).empty());               // empty
    CHECK_FALSE(path_problem({a, CubeLabeling(2, {0, 1, 1, 0}), a}, a, a).empty());  // non-surjective
}
