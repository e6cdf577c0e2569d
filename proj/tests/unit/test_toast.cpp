#include "polychrome/coloring.hpp"
#include "polychrome/distance.hpp"
#include "polychrome/error.hpp"
#include "polychrome/toast.hpp"

#include <doctest.h>

#include <algorithm>

using namespace polychrome;

namespace {

Box full_box(const Torus& t) {
    Box b;
    for (int i = 0; i < t.dim(); ++i) {
        b.lo.push_back(0);
        b.hi.push_back(t.side(i) - 1);
    }
    return b;
}

bool has_kind(const ToastReport& r, ToastViolation::Kind k) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const auto& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("single whole-torus piece is valid for every r") {
    const Torus t({8, 8});
    for (int r : {0, 1, 5, 100}) {
        const Toast toast(t, r, {{0, std::nullopt, full_box(t)}});
        CHECK(validate(toast).ok);
        CHECK(iteration_order(toast) == std::vector<int>{0});
        CHECK(maximal_internal_pieces(toast, 0).empty());
    }
}

TEST_CASE("close disjoint pieces violate the pairwise condition") {
    const Torus t({16, 16});
    const Toast toast(t, 3,
                      {{0, std::nullopt, full_box(t)},
                       {1, 0, Box{{4, 4}, {5, 5}}},
                       {2, 0, Box{{8, 4}, {9, 5}}}});  // distance 3 <= r
    const auto report = validate(toast);
    CHECK_FALSE(report.ok);
    REQUIRE(has_kind(report, ToastViolation::Kind::pairwise));
    const auto& v = *std::find_if(report.violations.begin(), report.violations.end(),
                                  [](const auto& x) { return x.kind == ToastViolation::Kind::pairwise; });
    CHECK(v.pieces == std::vector<int>{1, 2});
}

TEST_CASE("nesting needs the r-margin, non-strict containment is accepted") {
    const Torus t({16, 16});
    // B_2 of the inner box reaches exactly the outer box boundary.
    const Toast ok(t, 2,
                   {{0, std::nullopt, full_box(t)}, {1, 0, Box{{1, 1}, {10, 10}}}, {2, 1, Box{{3, 3}, {8, 8}}}});
    CHECK(validate(ok).ok);
    const Toast tight(t, 2,
                      {{0, std::nullopt, full_box(t)}, {1, 0, Box{{1, 1}, {10, 10}}}, {2, 1, Box{{2, 3}, {8, 8}}}});
    const auto report = validate(tight);
    CHECK_FALSE(report.ok);
    CHECK(has_kind(report, ToastViolation::Kind::pairwise));
}

TEST_CASE("coverage violations list vertices") {
    const Torus t({8, 8});
    const Toast toast(t, 1, {{0, std::nullopt, Box{{0, 0}, {5, 7}}}});
    const auto report = validate(toast);
    CHECK_FALSE(report.ok);
    CHECK(std::count_if(report.violations.begin(), report.violations.end(),
                        [](const auto& v) { return v.kind == ToastViolation::Kind::coverage; }) == 16);
    CHECK(report.uncovered == 0);
    const Toast sparse(t, 1, {{0, std::nullopt, Box{{0, 0}, {0, 7}}}});
    CHECK(validate(sparse).uncovered == 56 - 16);
}

TEST_CASE("forest links must match nesting") {
    const Torus t({16, 16});
    const Toast wrong_parent(t, 1, {{0, std::nullopt, full_box(t)}, {1, std::nullopt, Box{{2, 2}, {6, 6}}}});
    const auto report = validate(wrong_parent);
    CHECK_FALSE(report.ok);
    CHECK(has_kind(report, ToastViolation::Kind::forest));

    const Toast dup(t, 1, {{0, std::nullopt, full_box(t)}, {1, 0, Box{{2, 2}, {6, 6}}}, {2, 0, Box{{2, 2}, {6, 6}}}});
    CHECK(has_kind(validate(dup), ToastViolation::Kind::duplicate));

    const Toast empty(t, 1, {{0, std::nullopt, full_box(t)}, {1, 0, std::vector<Index>{}}});
    CHECK(has_kind(validate(empty), ToastViolation::Kind::empty_piece));
}

TEST_CASE("structural errors are format errors") {
    const Torus t({8, 8});
    auto kind_of = [&](std::vector<ToastPiece> pieces) {
        try {
            Toast(t, 1, std::move(pieces));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::verification;
    };
    CHECK(kind_of({{0, std::nullopt, full_box(t)}, {0, std::nullopt, full_box(t)}}) == ErrorKind::format);
    CHECK(kind_of({{0, 7, full_box(t)}}) == ErrorKind::format);
    CHECK(kind_of({{0, 1, full_box(t)}, {1, 0, full_box(t)}}) == ErrorKind::format);
    CHECK(kind_of({}) == ErrorKind::format);
    CHECK(kind_of({{0, std::nullopt, Box{{0, 0}, {8, 7}}}}) == ErrorKind::format);
}

TEST_CASE("iteration order on a chain and on cell pieces") {
    const Torus t({16, 16});
    const Toast chain(t, 1,
                      {{2, std::nullopt, full_box(t)},
                       {1, 2, Box{{1, 1}, {12, 12}}},
                       {0, 1, Box{{3, 3}, {6, 6}}}});
    CHECK(validate(chain).ok);
    CHECK(iteration_order(chain) == std::vector<int>{0, 1, 2});
    CHECK(maximal_internal_pieces(chain, 2) == std::vector<int>{1});
    CHECK(maximal_internal_pieces(chain, 0).empty());
    CHECK(chain.depth(0) == 2);
    CHECK(chain.roots() == std::vector<int>{2});
    CHECK_THROWS_AS(maximal_internal_pieces(chain, 9), Error);

    // A plus-shaped piece given cell by cell.
    std::vector<Index> plus;
    for (Index v = 0; v < t.size(); ++v) {
        const auto x = t.coord(v, 0), y = t.coord(v, 1);
        if ((x == 8 && y >= 6 && y <= 10) || (y == 8 && x >= 6 && x <= 10)) plus.push_back(v);
    }
    const Toast cells(t, 1, {{0, std::nullopt, full_box(t)}, {5, 0, plus}});
    CHECK(validate(cells).ok);
    CHECK(iteration_order(cells) == std::vector<int>{5, 0});
}

TEST_CASE("generate: levels 0 gives the trivial toast") {
    const Torus t({16, 16});
    const auto toast = generate(t, 66, 0, 1);
    CHECK(toast.size() == 1);
    CHECK(toast.cells(0).is_full());
    CHECK(validate(toast).ok);
}

TEST_CASE("generate: default d=2 constants on 512x512") {
    const Torus t({512, 512});
    const auto toast = generate(t, 66, 2, 7);
    CHECK(toast.size() >= 3);
    CHECK(validate(toast).ok);
}

TEST_CASE("generate: infeasible geometry is a sizing error") {
    const Torus t({16, 16});
    try {
        generate(t, 66, 1, 1);
        FAIL("expected a sizing error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::sizing);
        CHECK(std::string(e.what()).find("axis 0") != std::string::npos);
    }
    CHECK_THROWS_AS(generate(t, 1, -1, 1), Error);
    GenerationPolicy bad;
    bad.leaf_min = 10;
    bad.leaf_max = 5;
    CHECK_THROWS_AS(generate(t, 1, 1, 1, bad), Error);
}

TEST_CASE("generate: geometric consequences used by the colouring") {
    // Each case keeps r >= 2R + d.
    struct Case {
        std::vector<std::int64_t> sides;
        int r, levels, R;
    };
    const std::vector<Case> cases{{{512, 512}, 66, 2, 32}, {{256, 200}, 66, 1, 32}, {{160, 160}, 20, 3, 8},
                                  {{96, 96, 96}, 13, 2, 5},  {{64, 64}, 9, 3, 3}};
    for (const auto& cs : cases) {
        const Torus t(cs.sides);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto toast = generate(t, cs.r, cs.levels, seed);
            REQUIRE(validate(toast).ok);
            CHECK(toast.children(0).size() >= 1);
            const auto order = iteration_order(toast);
            CHECK(order.size() == toast.size());
            for (const auto& p : toast.pieces()) {
                const auto pos = std::find(order.begin(), order.end(), p.id) - order.begin();
                if (p.parent) CHECK(pos < std::find(order.begin(), order.end(), *p.parent) - order.begin());
                const auto kids = maximal_internal_pieces(toast, p.id);
                std::vector<VertexSet> thick;
                for (int L : kids) {
                    thick.push_back(ball(toast.cells(L), cs.R));
                    CHECK(thick.back().is_subset_of(toast.cells(p.id)));
                }
                for (std::size_t a = 0; a < thick.size(); ++a)
                    for (std::size_t b = a + 1; b < thick.size(); ++b)
                        CHECK_FALSE(ball(thick[a], t.dim()).intersects(thick[b]));
            }
        }
    }
}

TEST_CASE("generate is deterministic in the seed") {
    const Torus t({300, 300});
    const auto a = generate(t, 20, 2, 123), b = generate(t, 20, 2, 123), c = generate(t, 20, 2, 124);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.pieces()[i].id == b.pieces()[i].id);
        CHECK(std::get<Box>(a.pieces()[i].shape) == std::get<Box>(b.pieces()[i].shape));
    }
    bool differs = a.size() != c.size();
    for (std::size_t i = 0; !differs && i < a.size(); ++i)
        differs = !(std::get<Box>(a.pieces()[i].shape) == std::get<Box>(c.pieces()[i].shape));
    CHECK(differs);
}

TEST_CASE("required_side") {
    CHECK(required_side(0, 66, {}) == 4);
    CHECK(required_side(2, 66, {}) == 4 + 264);
}
