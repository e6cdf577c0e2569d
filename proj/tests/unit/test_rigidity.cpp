#include "polychrome/checks.hpp"
#include "polychrome/error.hpp"
#include "polychrome/rigidity.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace polychrome;

namespace {

std::vector<Labeling> enumerate_all(const Torus& t) {
    std::vector<Labeling> out;
    enumerate_polychromatic(t, 4, [&](const Labeling& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

Labeling complement(Labeling c) {
    for (auto& x : c.data()) x = static_cast<Color>(1 - x);
    return c;
}

}  // namespace

TEST_CASE("extraction from the period-2 pattern gives stripes") {
    const Torus t({6, 6});
    const auto c = testing::figure1(t);
    const auto c0 = extract_2_coloring(c, 0);
    CHECK(c0 == complement(testing::stripes(t, 0)));
    CHECK(is_proper_2_coloring(c0, 0));
    const auto c1 = extract_2_coloring(c, 1);
    CHECK(c1 == complement(testing::stripes(t, 1)));
    CHECK(is_proper_2_coloring(c1, 1));
    CHECK(is_invariant(c1, Shift{1, 0}));
    const auto tuple = extract_tuple(c);
    REQUIRE(tuple.size() == 2);
    CHECK(tuple[0] == c0);
    CHECK(tuple[1] == c1);
    const auto report = invariance_report(tuple);
    CHECK(report.n() == 2);
    CHECK(report.non_invariant().empty());
}

TEST_CASE("extraction rejects non-polychromatic input") {
    const Torus t({4, 4});
    auto c = testing::figure1(t);
    c[5] = c[6];
    try {
        extract_2_coloring(c, 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
        CHECK(std::string(e.what()).find("cube") != std::string::npos);
    }
    CHECK_THROWS_AS(extract_2_coloring(Labeling(t, 3), 0), Error);
    CHECK_THROWS_AS(extract_2_coloring(testing::figure1(t), 2), Error);
}

TEST_CASE("d=1: a proper 2-colouring extracts to an equivalent one") {
    const Torus t({8});
    const auto c = testing::stripes(t, 0);
    const auto tuple = extract_tuple(c);
    REQUIRE(tuple.size() == 1);
    CHECK(tuple[0] == complement(c));
    CHECK(invariance_report(tuple).n() == 1);
    CHECK(assemble(tuple) == complement(c));
}

TEST_CASE("invariance report") {
    const Torus t({8, 8});
    Labeling twisted(t, 2);
    for (Index v = 0; v < t.size(); ++v)
        twisted[v] = static_cast<Color>((t.coord(v, 0) + t.coord(v, 1) / 2) % 2);
    const auto report = invariance_report({twisted, testing::stripes(t, 1)});
    CHECK_FALSE(report.inv[0][1]);
    CHECK(report.inv[1][0]);
    CHECK(report.n() == 1);
    CHECK(report.non_invariant() == std::vector<int>{0});
    CHECK_THROWS_AS(invariance_report({testing::stripes(t, 1), testing::stripes(t, 1)}), Error);
}

TEST_CASE("flipping one vertex breaks invariance") {
    const Torus t({6, 6});
    auto s = testing::stripes(t, 0);
    REQUIRE(is_invariant(s, Shift{0, 1}));
    s[7] = static_cast<Color>(1 - s[7]);
    CHECK_FALSE(is_invariant(s, Shift{0, 1}));
}

TEST_CASE("assemble") {
    const Torus t({6, 6});
    const auto c = assemble({testing::stripes(t, 0), testing::stripes(t, 1)});
    CHECK(c == testing::figure1(t));
    CHECK(is_polychromatic(c, 4).ok);

    const Torus t3({8, 8, 8});
    const auto c3 = assemble({testing::stripes(t3, 0), testing::stripes(t3, 1), testing::stripes(t3, 2)});
    CHECK(c3.k() == 8);
    CHECK(is_polychromatic(c3, 8).ok);
    CHECK(testing::naive_polychromatic(c3, 8));

    std::vector<Labeling> zero_fold;
    for (int i = 0; i < 3; ++i) {
        Labeling ci(t3, 2);
        for (Index v = 0; v < t3.size(); ++v) {
            std::int64_t s = t3.coord(v, i);
            for (int j = 0; j < 3; ++j)
                if (j != i) s += t3.coord(v, j) / 2;
            ci[v] = static_cast<Color>(s % 2);
        }
        zero_fold.push_back(ci);
    }
    REQUIRE(invariance_report(zero_fold).n() == 0);
    try {
        assemble(zero_fold);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
}

TEST_CASE("every 1-fold invariant tuple on the 4x4 torus assembles to a 4-polychromatic colouring") {
    const Torus t({4, 4});
    // All proper 2-colourings in direction i: one free bit per line.
    auto all_proper = [&](int axis) {
        std::vector<Labeling> out;
        const int other = 1 - axis;
        for (int bits = 0; bits < 16; ++bits) {
            Labeling c(t, 2);
            for (Index v = 0; v < t.size(); ++v)
                c[v] = static_cast<Color>((t.coord(v, axis) + (bits >> t.coord(v, other) & 1)) % 2);
            out.push_back(c);
        }
        return out;
    };
    const auto p0 = all_proper(0), p1 = all_proper(1);
    int tuples = 0;
    for (const auto& a : p0)
        for (const auto& b : p1) {
            const auto report = invariance_report({a, b});
            if (report.n() < 1) {
                CHECK_THROWS_AS(assemble({a, b}), Error);
                continue;
            }
            ++tuples;
            CHECK(is_polychromatic(assemble({a, b}), 4).ok);
        }
    CHECK(tuples == 60);
}

TEST_CASE("enumeration on the 4x4 torus") {
    const Torus t({4, 4});
    const auto all = enumerate_all(t);
    CHECK(all.size() == 168);  // regression constant, cross-checked by an independent backtracker
    std::set<std::vector<Color>> distinct;
    for (const auto& c : all) {
        distinct.insert(c.data());
        CHECK(testing::naive_polychromatic(c, 4));
    }
    CHECK(distinct.size() == all.size());
    CHECK(distinct.count(testing::figure1(t).data()) == 1);
    int canonical = 0;
    for (const auto& c : all) canonical += is_color_canonical(c);
    CHECK(canonical == 7);
    CHECK(canonical * 24 == static_cast<int>(all.size()));

    int seen = 0;
    const auto visited = enumerate_polychromatic(t, 4, [&](const Labeling&) { return ++seen < 5; });
    CHECK(visited == 5);
}

TEST_CASE("enumeration order is lexicographic and deterministic") {
    const Torus t({4, 4});
    const auto a = enumerate_all(t), b = enumerate_all(t);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].data() < a[i].data());
}

TEST_CASE("enumeration size guard") {
    CHECK_NOTHROW(check_enumeration_size(Torus({4, 6}), 4));
    CHECK_NOTHROW(check_enumeration_size(Torus({6, 6}), 4));
    CHECK_THROWS_AS(check_enumeration_size(Torus({8, 8}), 4), Error);
    CHECK_THROWS_AS(check_enumeration_size(Torus({4, 4}), 3), Error);
    CHECK_THROWS_AS(check_enumeration_size(Torus({4, 4, 4}), 4), Error);
    CHECK_THROWS_AS(enumerate_polychromatic(Torus({4, 8}), 4, [](const Labeling&) { return true; }), Error);
}

TEST_CASE("round trip and complementation on every enumerated colouring") {
    for (const auto& sides : std::vector<std::vector<std::int64_t>>{{4, 4}, {4, 6}}) {
        const Torus t(sides);
        for (const auto& c : enumerate_all(t)) {
            for (int m = 0; m < 4; ++m) {
                const auto tuple = extract_tuple(c, static_cast<Color>(m));
                for (int i = 0; i < 2; ++i) CHECK(is_proper_2_coloring(tuple[static_cast<std::size_t>(i)], i));
                CHECK(invariance_report(tuple).n() >= 1);
            }
            for (int i = 0; i < 2; ++i) {
                CHECK_FALSE(complementation_violation(c, i));
                for (Index x = 0; x < t.size(); ++x) {
                    const auto here = face_color_mask(c, i, x), there = face_color_mask(c, i, t.step(x, i, 1));
                    CHECK((here ^ there) == 0xF);
                    CHECK((here & there) == 0);
                }
            }
            CHECK((is_invariant(c, Shift{2, 0}) || is_invariant(c, Shift{0, 2})));
        }
    }
}

TEST_CASE("complementation fails off the polychromatic set") {
    const Torus t({4, 4});
    CHECK(complementation_violation(Labeling(t, 4), 0));
}

TEST_CASE("dichotomy census") {
    const auto r44 = verify_dichotomy_d2(Torus({4, 4}));
    CHECK(r44.ok());
    CHECK(r44.total == 168);
    CHECK(r44.e0_only + r44.e1_only + r44.both == r44.total);
    CHECK(r44.both == 24);
    CHECK(r44.canonical_total == 7);
    CHECK_FALSE(r44.counterexample);

    const auto r46 = verify_dichotomy_d2(Torus({4, 6}));
    CHECK(r46.ok());
    CHECK(r46.total == 456);
    const auto r64 = verify_dichotomy_d2(Torus({6, 4}));
    CHECK(r64.e0_only == r46.e1_only);
    CHECK(r64.e1_only == r46.e0_only);
    const auto r66 = verify_dichotomy_d2(Torus({6, 6}));
    CHECK(r66.ok());
    CHECK(r66.total == 744);
}

TEST_CASE("period-2 pattern is invariant under both squares") {
    const Torus t({4, 4});
    const auto c = testing::figure1(t);
    CHECK(is_invariant(c, Shift{2, 0}));
    CHECK(is_invariant(c, Shift{0, 2}));
}
