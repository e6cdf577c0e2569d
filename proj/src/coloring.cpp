#include "polychrome/coloring.hpp"

#include "polychrome/distance.hpp"
#include "polychrome/error.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace polychrome {

int default_thickening(int d) { return (1 << (d + 2)) * d; }

int default_separation(int d) { return ((1 << (d + 3)) + 1) * d; }

Index choose_root(const VertexSet& K) {
    const auto root = K.first();
    require(root.has_value(), "choose_root: piece is empty");
    return *root;
}

namespace {

Parity parity(const Torus& domain, Index x) {
    Parity p = 0;
    for (int i = 0; i < domain.dim(); ++i) p |= static_cast<Parity>(domain.coord(x, i) & 1) << i;
    return p;
}

}  // namespace

Parity phi(const Torus& domain, Index root, Index x) { return parity(domain, x) ^ parity(domain, root); }

Parity phi(const VertexSet& K, Index x) { return phi(K.domain(), choose_root(K), x); }

Color template_color(const CubeLabeling& base, const VertexSet& K, Index x) { return base[phi(K, x)]; }

int shell_index(std::int64_t distance, int d, int R) {
    require(distance >= 1, "shell_index: vertex lies inside the internal piece");
    require(distance <= R, "shell_index: vertex lies outside B_R of the internal piece");
    return static_cast<int>(std::min<std::int64_t>(distance / (2 * d), std::int64_t{1} << (d + 1)));
}

int shell_index(const VertexSet& L, Index x, int R) {
    return shell_index(graph_dist(L, x), L.domain().dim(), R);
}

CubeLabeling translate(const CubeLabeling& base, Parity shift) {
    std::vector<Color> values(base.values.size());
    for (std::size_t v = 0; v < values.size(); ++v) values[v] = base[v ^ shift];
    return CubeLabeling(base.d, std::move(values));
}

ColoringPlan make_plan(const Toast& toast, const CubeLabeling& base, std::optional<int> R_opt, bool validate_toast) {
    const auto& domain = toast.domain();
    const int d = domain.dim();
    require(base.d == d, "base labeling is for d=" + std::to_string(base.d) + " but the torus has d=" + std::to_string(d));
    require(is_surjective(base), "base labeling is not surjective onto " + std::to_string(base.color_count()) + " colours");

    const int R = R_opt.value_or(default_thickening(d));
    const int width = 2 * d;
    const int shells = 1 << (d + 1);
    if (R <= 0 || R % width != 0)
        fail(ErrorKind::sizing, "R=" + std::to_string(R) + " must be a positive multiple of the shell width 2d=" + std::to_string(width));
    if (R / width < shells)
        fail(ErrorKind::sizing, "R=" + std::to_string(R) + " leaves room for " + std::to_string(R / width) +
                                    " shells of width " + std::to_string(width) + ", need " + std::to_string(shells));
    if (toast.r() < 2 * R + d)
        fail(ErrorKind::sizing, "toast separation r=" + std::to_string(toast.r()) + " is below 2R+d=" + std::to_string(2 * R + d));
    if (R > kMaxDistanceCap) fail(ErrorKind::sizing, "R exceeds the distance-field cap");

    if (validate_toast) {
        const auto report = validate(toast);
        if (!report.ok)
            fail(ErrorKind::verification, "toast is invalid: " + report.violations.front().message);
    }
    require(toast.roots().size() == 1 && toast.cells(toast.roots().front()).is_full(),
            "toast must have a single top piece covering the torus");

    ColoringPlan plan{toast, base, R, width, {}, iteration_order(toast)};
    plan.pieces.resize(toast.size());
    for (const auto& p : toast.pieces()) {
        PiecePlan& pp = plan.pieces[toast.position(p.id)];
        pp.id = p.id;
        pp.root = choose_root(toast.cells(p.id));
    }
    for (const auto& p : toast.pieces()) {
        PiecePlan& pp = plan.pieces[toast.position(p.id)];
        for (int child : toast.children(p.id)) {
            GapPlan g;
            g.child = child;
            g.child_root = plan.piece(child).root;
            g.chart_shift = phi(domain, pp.root, g.child_root);
            const auto path = connect(translate(base, g.chart_shift), base);
            if (static_cast<int>(path.size()) > shells + 1)
                fail(ErrorKind::verification, "cube path longer than 2^{d+1} steps");
            for (int t = 0; t <= shells; ++t)
                g.stages.push_back(path[static_cast<std::size_t>(std::min<int>(t, static_cast<int>(path.size()) - 1))]);
            pp.gaps.push_back(std::move(g));
        }
    }
    return plan;
}

namespace {

DistanceField children_field(const ColoringPlan& plan, int id) {
    std::vector<VertexSet> kids;
    for (int c : plan.toast.children(id)) kids.push_back(plan.toast.cells(c));
    return distance_field(plan.toast.domain(), kids, plan.R);
}

}  // namespace

Labeling build_coloring(const ColoringPlan& plan) {
    const auto& domain = plan.toast.domain();
    const int d = domain.dim();
    Labeling c(domain, plan.colors());
    for (int id : plan.order) {
        const VertexSet& K = plan.toast.cells(id);
        const PiecePlan& pp = plan.piece(id);
        const Parity root_parity = parity(domain, pp.root);
        const Index first = *K.first(), last = *K.last();
        if (pp.gaps.empty()) {
#pragma omp parallel for schedule(static)
            for (Index v = first; v <= last; ++v)
                if (K.contains(v)) c[v] = plan.base[parity(domain, v) ^ root_parity];
            continue;
        }
        const auto field = children_field(plan, id);
#pragma omp parallel for schedule(static)
        for (Index v = first; v <= last; ++v) {
            if (!K.contains(v)) continue;
            const auto dist = field.dist[static_cast<std::size_t>(v)];
            if (dist == 0) continue;  // internal piece, already coloured
            const Parity chart = parity(domain, v) ^ root_parity;
            if (dist == kFar) {
                c[v] = plan.base[chart];
            } else {
                const auto& g = pp.gaps[field.source[static_cast<std::size_t>(v)]];
                c[v] = g.stages[static_cast<std::size_t>(shell_index(dist, d, plan.R))][chart];
            }
        }
    }
    return c;
}

Labeling build_coloring(const Toast& toast, const CubeLabeling& base, std::optional<int> R) {
    return build_coloring(make_plan(toast, base, R));
}

namespace {

std::size_t gap_position(const ColoringPlan& plan, int id, int child) {
    const auto& gaps = plan.piece(id).gaps;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i].child == child) return i;
    fail(ErrorKind::precondition, "piece " + std::to_string(child) + " is not a maximal internal piece of " + std::to_string(id));
}

}  // namespace

VertexSet exterior(const ColoringPlan& plan, int id) {
    const VertexSet& K = plan.toast.cells(id);
    if (plan.piece(id).gaps.empty()) return K;
    const auto field = children_field(plan, id);
    VertexSet out(K.domain());
    K.for_each([&](Index v) {
        if (field.dist[static_cast<std::size_t>(v)] == kFar) out.insert(v);
    });
    return out;
}

VertexSet gap(const ColoringPlan& plan, int id, int child) {
    const auto pos = gap_position(plan, id, child);
    const auto field = children_field(plan, id);
    VertexSet out(plan.toast.domain());
    plan.toast.cells(id).for_each([&](Index v) {
        const auto at = static_cast<std::size_t>(v);
        if (field.dist[at] != 0 && field.dist[at] != kFar && field.source[at] == pos) out.insert(v);
    });
    return out;
}

VertexSet shell(const ColoringPlan& plan, int id, int child, int t) {
    const auto pos = gap_position(plan, id, child);
    const auto field = children_field(plan, id);
    const int d = plan.toast.domain().dim();
    VertexSet out(plan.toast.domain());
    plan.toast.cells(id).for_each([&](Index v) {
        const auto at = static_cast<std::size_t>(v);
        if (field.dist[at] != 0 && field.dist[at] != kFar && field.source[at] == pos &&
            shell_index(field.dist[at], d, plan.R) == t)
            out.insert(v);
    });
    return out;
}

PlanReport verify_plan_invariants(const ColoringPlan& plan, const Labeling& c) {
    const auto& domain = plan.toast.domain();
    require(c.domain() == domain, "labeling lives on a different torus than the plan");
    const int d = domain.dim();
    const int corners = domain.cube_size();
    const int last_stage = plan.last_stage();
    const std::uint64_t want = (std::uint64_t{1} << plan.colors()) - 1;
    constexpr std::size_t kKept = 32;

    PlanReport report;
    for (const auto& p : plan.toast.pieces()) {
        const int id = p.id;
        const VertexSet& K = plan.toast.cells(id);
        const PiecePlan& pp = plan.piece(id);
        const Parity root_parity = parity(domain, pp.root);
        const bool has_gaps = !pp.gaps.empty();
        DistanceField field;
        if (has_gaps) field = children_field(plan, id);
        const Index first = *K.first(), last = *K.last();

        Index checked = 0, ext = 0, gapc = 0, inner = 0, outer = 0, bad = 0;
        std::vector<PlanViolation> found;
#pragma omp parallel reduction(+ : checked, ext, gapc, inner, outer, bad)
        {
            std::vector<PlanViolation> local;
            std::array<Index, 1 << kMaxDim> cube{};
            std::array<int, 1 << kMaxDim> stage{};
#pragma omp for schedule(static)
            for (Index base = first; base <= last; ++base) {
                if (!K.contains(base)) continue;
                const auto off = domain.unit_offsets(base);
                bool inside = true;
                for (int eps = 0; eps < corners; ++eps) {
                    Index v = base;
                    for (int i = 0; i < d; ++i)
                        if (eps >> i & 1) v += off[static_cast<std::size_t>(i)];
                    cube[static_cast<std::size_t>(eps)] = v;
                    inside = inside && K.contains(v);
                }
                if (!inside) continue;  // judged in an ancestor

                auto flag = [&](std::string reason) {
                    ++bad;
                    if (local.size() < kKept) local.push_back({base, id, std::move(reason)});
                };

                int owner = -1;
                bool all_internal = has_gaps, meets_gap = false, two_owners = false;
                bool touches_internal = false, touches_exterior = false;
                int tmin = last_stage, tmax = 0, smin = last_stage, smax = 0;
                for (int eps = 0; eps < corners; ++eps) {
                    const auto at = static_cast<std::size_t>(cube[static_cast<std::size_t>(eps)]);
                    int s = last_stage;  // exterior
                    if (has_gaps && field.dist[at] != kFar) {
                        const int src = field.source[at];
                        if (owner >= 0 && owner != src) two_owners = true;
                        owner = src;
                        if (field.dist[at] == 0) {
                            s = 0;
                            touches_internal = true;
                        } else {
                            s = shell_index(field.dist[at], d, plan.R);
                            meets_gap = true;
                            tmin = std::min(tmin, s);
                            tmax = std::max(tmax, s);
                        }
                    }
                    if (has_gaps && field.dist[at] == kFar) touches_exterior = true;
                    if (!has_gaps || field.dist[at] != 0) all_internal = false;
                    stage[static_cast<std::size_t>(eps)] = s;
                    smin = std::min(smin, s);
                    smax = std::max(smax, s);
                }
                if (all_internal && !two_owners) continue;  // judged inside the internal piece
                ++checked;

                std::uint64_t mask = 0;
                for (int eps = 0; eps < corners; ++eps) mask |= std::uint64_t{1} << c[cube[static_cast<std::size_t>(eps)]];
                if ((mask & want) != want) flag("cube misses a colour");

                if (two_owners) {
                    flag("cube meets more than one gap");
                    continue;
                }
                if (!meets_gap && owner < 0) {
                    ++ext;
                    for (int eps = 0; eps < corners; ++eps) {
                        const Index v = cube[static_cast<std::size_t>(eps)];
                        if (c[v] != plan.base[parity(domain, v) ^ root_parity]) {
                            flag("exterior cube is not template-coloured");
                            break;
                        }
                    }
                    continue;
                }
                ++gapc;
                if (meets_gap && tmax - tmin > 1)
                    flag("cube spans shells " + std::to_string(tmin) + ".." + std::to_string(tmax));
                if (touches_internal) ++inner;
                if (touches_exterior) ++outer;
                if (smax - smin > 1) {
                    flag("cube spans interpolation stages " + std::to_string(smin) + ".." + std::to_string(smax));
                    continue;
                }
                const auto& stages = pp.gaps[static_cast<std::size_t>(owner)].stages;
                auto matches = [&](int s) {
                    for (int eps = 0; eps < corners; ++eps) {
                        const Index v = cube[static_cast<std::size_t>(eps)];
                        if (c[v] != stages[static_cast<std::size_t>(s)][parity(domain, v) ^ root_parity]) return false;
                    }
                    return true;
                };
                if (!matches(smin) && !matches(smax))
                    flag("cube matches neither stage " + std::to_string(smin) + " nor stage " + std::to_string(smax));
            }
#pragma omp critical
            found.insert(found.end(), local.begin(), local.end());
        }
        report.cubes_checked += checked;
        report.exterior_cubes += ext;
        report.gap_cubes += gapc;
        report.inner_seam_cubes += inner;
        report.outer_seam_cubes += outer;
        report.violation_count += bad;
        report.violations.insert(report.violations.end(), found.begin(), found.end());
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const auto& a, const auto& b) { return a.base != b.base ? a.base < b.base : a.reason < b.reason; });
    if (report.violations.size() > kKept) report.violations.resize(kKept);
    return report;
}

}  // namespace polychrome
