#include "polychrome/toast.hpp"

#include "polychrome/distance.hpp"
#include "polychrome/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace polychrome {

VertexSet ToastPiece::cells(const Torus& domain) const {
    if (const auto* box = std::get_if<Box>(&shape)) return VertexSet::from_box(domain, *box);
    return VertexSet::from_indices(domain, std::get<std::vector<Index>>(shape));
}

Toast::Toast(const Torus& domain, int r, std::vector<ToastPiece> pieces)
    : domain_(domain), r_(r), pieces_(std::move(pieces)) {
    if (r < 0) fail(ErrorKind::format, "toast radius must be non-negative");
    if (pieces_.empty()) fail(ErrorKind::format, "toast has no pieces");
    for (std::size_t p = 0; p < pieces_.size(); ++p) by_id_.emplace_back(pieces_[p].id, p);
    std::sort(by_id_.begin(), by_id_.end());
    for (std::size_t i = 1; i < by_id_.size(); ++i)
        if (by_id_[i].first == by_id_[i - 1].first)
            fail(ErrorKind::format, "duplicate toast piece id " + std::to_string(by_id_[i].first));

    children_.resize(pieces_.size());
    for (const auto& p : pieces_) {
        if (!p.parent) continue;
        if (!has(*p.parent))
            fail(ErrorKind::format, "piece " + std::to_string(p.id) + " names unknown parent " + std::to_string(*p.parent));
        children_[position(*p.parent)].push_back(p.id);
    }
    for (auto& c : children_) std::sort(c.begin(), c.end());
    for (const auto& p : pieces_) {
        std::size_t hops = 0;
        for (auto q = p.parent; q; q = piece(*q).parent)
            if (++hops > pieces_.size())
                fail(ErrorKind::format, "parent links of piece " + std::to_string(p.id) + " form a cycle");
    }

    cells_.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        try {
            cells_.push_back(p.cells(domain_));
        } catch (const Error& e) {
            fail(ErrorKind::format, "piece " + std::to_string(p.id) + ": " + e.what());
        }
    }
}

bool Toast::has(int id) const noexcept {
    auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair<int, std::size_t>{id, 0});
    return it != by_id_.end() && it->first == id;
}

std::size_t Toast::position(int id) const {
    auto it = std::lower_bound(by_id_.begin(), by_id_.end(), std::pair<int, std::size_t>{id, 0});
    if (it == by_id_.end() || it->first != id) fail(ErrorKind::precondition, "unknown toast piece id " + std::to_string(id));
    return it->second;
}

std::vector<int> Toast::roots() const {
    std::vector<int> out;
    for (const auto& p : pieces_)
        if (!p.parent) out.push_back(p.id);
    std::sort(out.begin(), out.end());
    return out;
}

int Toast::depth(int id) const {
    int n = 0;
    for (auto q = piece(id).parent; q; q = piece(*q).parent) ++n;
    return n;
}

const char* to_string(ToastViolation::Kind kind) noexcept {
    switch (kind) {
        case ToastViolation::Kind::empty_piece: return "empty_piece";
        case ToastViolation::Kind::duplicate: return "duplicate";
        case ToastViolation::Kind::pairwise: return "pairwise";
        case ToastViolation::Kind::coverage: return "coverage";
        case ToastViolation::Kind::forest: return "forest";
    }
    return "unknown";
}

ToastReport validate(const Toast& t) {
    using Kind = ToastViolation::Kind;
    ToastReport report;
    const auto& domain = t.domain();
    const auto& pieces = t.pieces();
    const std::size_t n = pieces.size();
    auto add = [&](Kind kind, std::vector<int> ids, std::optional<Index> v, std::string msg) {
        report.violations.push_back({kind, std::move(ids), v, std::move(msg)});
    };

    std::vector<const VertexSet*> cells(n);
    for (std::size_t p = 0; p < n; ++p) {
        cells[p] = &t.cells(pieces[p].id);
        if (cells[p]->empty()) add(Kind::empty_piece, {pieces[p].id}, std::nullopt, "piece has no cells");
    }

    // Coverage.
    VertexSet covered(domain);
    for (auto* c : cells) covered |= *c;
    if (!covered.is_full()) {
        constexpr Index listed = 16;
        Index missing = 0;
        for (Index v = 0; v < domain.size(); ++v) {
            if (covered.contains(v)) continue;
            if (missing < listed) add(Kind::coverage, {}, v, "vertex not covered by any piece");
            ++missing;
        }
        report.uncovered = std::max<Index>(0, missing - listed);
    }

    // Pairwise r-separation: exactly one of B_r(K) <= K', B_r(K') <= K,
    // B_r(K) disjoint from K'.
    std::vector<VertexSet> balls;
    balls.reserve(n);
    for (std::size_t p = 0; p < n; ++p)
        balls.push_back(cells[p]->empty() ? VertexSet(domain) : ball(*cells[p], t.r()));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (cells[a]->empty() || cells[b]->empty()) continue;
            const int ia = pieces[a].id, ib = pieces[b].id;
            if (*cells[a] == *cells[b]) {
                add(Kind::duplicate, {ia, ib}, std::nullopt, "pieces have identical cells");
                continue;
            }
            const bool a_in_b = balls[a].is_subset_of(*cells[b]);
            const bool b_in_a = balls[b].is_subset_of(*cells[a]);
            const bool apart = !balls[a].intersects(*cells[b]);
            const int holds = int(a_in_b) + int(b_in_a) + int(apart);
            if (holds != 1) {
                std::string msg = "pieces " + std::to_string(ia) + " and " + std::to_string(ib) +
                                  " are neither nested with an r-margin nor more than r apart";
                if (holds > 1) msg = "pieces " + std::to_string(ia) + " and " + std::to_string(ib) +
                                     " satisfy more than one separation case";
                add(Kind::pairwise, {ia, ib}, std::nullopt, msg);
            }
        }
    }

    // Forest consistency: declared parent is the smallest strict superset, and
    // the strict supersets of every piece form a chain.
    std::vector<Index> sizes(n);
    for (std::size_t p = 0; p < n; ++p) sizes[p] = cells[p]->count();
    for (std::size_t p = 0; p < n; ++p) {
        if (sizes[p] == 0) continue;
        std::vector<std::size_t> supers;
        for (std::size_t q = 0; q < n; ++q)
            if (q != p && sizes[q] > sizes[p] && cells[p]->is_subset_of(*cells[q])) supers.push_back(q);
        std::sort(supers.begin(), supers.end(), [&](auto x, auto y) { return sizes[x] < sizes[y]; });
        for (std::size_t i = 1; i < supers.size(); ++i) {
            if (!cells[supers[i - 1]]->is_subset_of(*cells[supers[i]]))
                add(Kind::forest, {pieces[p].id, pieces[supers[i - 1]].id, pieces[supers[i]].id}, std::nullopt,
                    "containers of piece " + std::to_string(pieces[p].id) + " are not nested");
        }
        const std::optional<int> expected =
            supers.empty() ? std::nullopt : std::optional<int>(pieces[supers.front()].id);
        if (expected != pieces[p].parent) {
            auto name = [](std::optional<int> x) { return x ? std::to_string(*x) : std::string("none"); };
            add(Kind::forest, {pieces[p].id}, std::nullopt,
                "piece " + std::to_string(pieces[p].id) + " declares parent " + name(pieces[p].parent) +
                    " but its smallest container is " + name(expected));
        }
    }

    report.ok = report.violations.empty() && report.uncovered == 0;
    return report;
}

std::vector<int> iteration_order(const Toast& t) {
    std::vector<int> height(t.size(), -1);
    std::function<int(int)> h = [&](int id) {
        auto& slot = height[t.position(id)];
        if (slot < 0) {
            int best = 0;
            for (int c : t.children(id)) best = std::max(best, h(c) + 1);
            slot = best;
        }
        return slot;
    };
    std::vector<int> ids;
    for (const auto& p : t.pieces()) {
        h(p.id);
        ids.push_back(p.id);
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        const int ha = height[t.position(a)], hb = height[t.position(b)];
        return ha != hb ? ha < hb : a < b;
    });
    return ids;
}

std::vector<int> maximal_internal_pieces(const Toast& t, int id) { return t.children(id); }

namespace {

// Portable bounded draw (std::uniform_int_distribution differs across
// standard libraries, which would break seeded reproducibility).
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

std::int64_t required_side(int height, int r, const GenerationPolicy& policy) {
    return policy.leaf_min + static_cast<std::int64_t>(height) * 2 * r;
}

Toast generate(const Torus& domain, int r, int levels, std::uint64_t seed, const GenerationPolicy& policy) {
    require(r >= 0, "toast radius must be non-negative");
    require(levels >= 0, "levels must be non-negative");
    require(policy.leaf_min >= 1 && policy.leaf_min <= policy.leaf_max, "leaf side range is empty");
    require(policy.max_children >= 1 && policy.retry_cap >= 1, "policy needs at least one child and one draw");
    require(policy.size_spread_percent >= 0 && policy.size_spread_percent <= 100, "size spread must be a percentage");
    const int d = domain.dim();

    Box whole{std::vector<std::int64_t>(static_cast<std::size_t>(d), 0), {}};
    for (int i = 0; i < d; ++i) whole.hi.push_back(domain.side(i) - 1);
    std::vector<ToastPiece> pieces{{0, std::nullopt, whole}};
    if (levels == 0) return Toast(domain, r, std::move(pieces));

    // Room for a top-level box: its r-ball must not wrap onto itself.
    const std::int64_t top_need = required_side(levels - 1, r, policy);
    for (int i = 0; i < d; ++i) {
        const std::int64_t room = domain.side(i) - 2 * static_cast<std::int64_t>(r) - 1;
        if (room < top_need)
            fail(ErrorKind::sizing,
                 "axis " + std::to_string(i) + ": side " + std::to_string(domain.side(i)) + " leaves room for boxes of side " +
                     std::to_string(std::max<std::int64_t>(room, 0)) + " (side - 2r - 1 with r=" + std::to_string(r) +
                     "), but " + std::to_string(levels) + " nested level(s) need side >= " + std::to_string(top_need) +
                     " (leaf_min + 2r per level below)");
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> frontier{0};
    int next_id = 1;
    for (int level = 1; level <= levels; ++level) {
        const int height = levels - level;
        const std::int64_t need = required_side(height, r, policy);
        std::vector<std::size_t> next_frontier;
        for (std::size_t parent_pos : frontier) {
            const Box parent = std::get<Box>(pieces[parent_pos].shape);
            const int parent_id = pieces[parent_pos].id;
            const bool top = parent_pos == 0;
            // Per-axis window [lo_min, hi_max] the child box must lie in.
            std::vector<std::int64_t> win_lo(static_cast<std::size_t>(d)), win_hi(static_cast<std::size_t>(d)),
                max_side(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                const auto k = static_cast<std::size_t>(i);
                if (top) {
                    win_lo[k] = 0;
                    win_hi[k] = domain.side(i) - 1;
                    max_side[k] = domain.side(i) - 2 * static_cast<std::int64_t>(r) - 1;
                } else {
                    win_lo[k] = parent.lo[k] + r;
                    win_hi[k] = parent.hi[k] - r;
                    max_side[k] = win_hi[k] - win_lo[k] + 1;
                }
            }
            std::vector<Box> siblings;
            for (int attempt = 0; attempt < policy.max_children; ++attempt) {
                for (int tries = 0; tries < policy.retry_cap; ++tries) {
                    Box box;
                    for (int i = 0; i < d; ++i) {
                        const auto k = static_cast<std::size_t>(i);
                        std::int64_t lo_side = need, hi_side;
                        if (height == 0) {
                            hi_side = std::min(policy.leaf_max, max_side[k]);
                        } else {
                            hi_side = need + (max_side[k] - need) * policy.size_spread_percent / 100;
                        }
                        const std::int64_t s = draw(rng, lo_side, std::max(lo_side, hi_side));
                        const std::int64_t lo = draw(rng, win_lo[k], win_hi[k] - s + 1);
                        box.lo.push_back(lo);
                        box.hi.push_back(lo + s - 1);
                    }
                    const bool separated = std::all_of(siblings.begin(), siblings.end(), [&](const Box& other) {
                        return box_distance(domain, box, other) > r;
                    });
                    if (!separated) continue;
                    siblings.push_back(box);
                    pieces.push_back({next_id++, parent_id, box});
                    next_frontier.push_back(pieces.size() - 1);
                    break;
                }
            }
        }
        frontier = std::move(next_frontier);
    }
    return Toast(domain, r, std::move(pieces));
}

}  // namespace polychrome
