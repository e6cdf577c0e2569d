#include "polychrome/rigidity.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace polychrome {

namespace {

void require_full_polychromatic(const Labeling& c) {
    const int corners = c.domain().cube_size();
    require(c.k() == corners, "expected a labeling with k=2^d=" + std::to_string(corners) + " colours, got k=" +
                                  std::to_string(c.k()));
    const auto check = is_polychromatic(c, corners);
    require(check.ok, "labeling is not " + std::to_string(corners) + "-polychromatic: " + check.diagnostic);
}

}  // namespace

std::uint64_t face_color_mask(const Labeling& c, int axis, Index x) {
    const auto& domain = c.domain();
    const auto off = domain.unit_offsets(x);
    std::uint64_t mask = 0;
    for (CubeOffset eps = 0; eps < static_cast<CubeOffset>(domain.cube_size()); ++eps) {
        if (eps >> axis & 1u) continue;
        Index v = x;
        for (int i = 0; i < domain.dim(); ++i)
            if (eps >> i & 1u) v += off[static_cast<std::size_t>(i)];
        mask |= std::uint64_t{1} << c[v];
    }
    return mask;
}

Labeling extract_2_coloring(const Labeling& c, int axis, Color marker) {
    const auto& domain = c.domain();
    require(axis >= 0 && axis < domain.dim(), "generator index out of range");
    require_full_polychromatic(c);
    require(marker < c.k(), "marker colour out of range");
    Labeling out(domain, 2);
#pragma omp parallel for schedule(static)
    for (Index x = 0; x < domain.size(); ++x) out[x] = (face_color_mask(c, axis, x) >> marker) & 1u;
    return out;
}

std::vector<Labeling> extract_tuple(const Labeling& c, Color marker) {
    std::vector<Labeling> tuple;
    for (int i = 0; i < c.domain().dim(); ++i) tuple.push_back(extract_2_coloring(c, i, marker));
    return tuple;
}

bool InvarianceReport::orthogonally_invariant(int i) const {
    for (int j = 0; j < d; ++j)
        if (j != i && !inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
}

int InvarianceReport::n() const {
    int count = 0;
    for (int i = 0; i < d; ++i) count += orthogonally_invariant(i);
    return count;
}

std::vector<int> InvarianceReport::non_invariant() const {
    std::vector<int> out;
    for (int i = 0; i < d; ++i)
        if (!orthogonally_invariant(i)) out.push_back(i);
    return out;
}

InvarianceReport invariance_report(const std::vector<Labeling>& tuple) {
    require(!tuple.empty(), "empty colouring tuple");
    const Torus& domain = tuple.front().domain();
    const int d = domain.dim();
    require(static_cast<int>(tuple.size()) == d, "tuple needs one 2-colouring per direction (" + std::to_string(d) + ")");
    InvarianceReport report{d, std::vector<std::vector<bool>>(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(d), false))};
    for (int i = 0; i < d; ++i) {
        const Labeling& ci = tuple[static_cast<std::size_t>(i)];
        require(ci.domain() == domain, "tuple members live on different tori");
        require(ci.k() == 2, "tuple member " + std::to_string(i) + " is not a 2-colouring");
        require(is_proper_2_coloring(ci, i), "tuple member " + std::to_string(i) + " is not a proper 2-colouring in direction " +
                                                 std::to_string(i));
        for (int j = 0; j < d; ++j)
            if (j != i) report.inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = is_invariant(ci, unit_shift(d, j));
    }
    return report;
}

Labeling assemble(const std::vector<Labeling>& tuple) {
    const auto report = invariance_report(tuple);
    const int d = report.d;
    if (report.n() < d - 1) {
        const auto bad = report.non_invariant();
        fail(ErrorKind::precondition, "tuple is only " + std::to_string(report.n()) + "-fold invariant (need " +
                                          std::to_string(d - 1) + "); directions " + std::to_string(bad[0]) + " and " +
                                          std::to_string(bad[1]) + " are not orthogonally invariant");
    }
    const Torus& domain = tuple.front().domain();
    Labeling out(domain, 1 << d);
#pragma omp parallel for schedule(static)
    for (Index x = 0; x < domain.size(); ++x) {
        Color value = 0;
        for (int i = 0; i < d; ++i) value |= static_cast<Color>(tuple[static_cast<std::size_t>(i)][x] << i);
        out[x] = value;
    }
    return out;
}

std::optional<Index> complementation_violation(const Labeling& c, int axis) {
    const auto& domain = c.domain();
    const std::uint64_t all = domain.cube_size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << domain.cube_size()) - 1;
    for (Index x = 0; x < domain.size(); ++x) {
        const std::uint64_t here = face_color_mask(c, axis, x);
        const std::uint64_t next = face_color_mask(c, axis, domain.step(x, axis, 1));
        if ((here & next) != 0 || (here | next) != all) return x;
    }
    return std::nullopt;
}

void check_enumeration_size(const Torus& domain, int k) {
    const bool sides_ok = std::all_of(domain.sides().begin(), domain.sides().end(), [](auto s) { return s == 4 || s == 6; });
    require(domain.dim() == 2 && sides_ok && k == 4,
            "exhaustive enumeration is limited to d=2, sides in {4,6}, k=4 (got " + domain.describe() + ", k=" +
                std::to_string(k) + ")");
}

std::uint64_t enumerate_polychromatic(const Torus& domain, int k, const std::function<bool(const Labeling&)>& visit) {
    check_enumeration_size(domain, k);
    const Index n = domain.size();
    // Earlier vertices sharing a cube with v.
    std::vector<std::vector<Index>> earlier(static_cast<std::size_t>(n));
    for (Index v = 0; v < n; ++v) {
        std::set<Index> mates;
        for (CubeOffset eps = 0; eps < static_cast<CubeOffset>(domain.cube_size()); ++eps) {
            Shift back(static_cast<std::size_t>(domain.dim()));
            for (int i = 0; i < domain.dim(); ++i) back[static_cast<std::size_t>(i)] = -static_cast<std::int64_t>(eps >> i & 1u);
            for (Index u : domain.cube_at(domain.act(v, back)))
                if (u < v) mates.insert(u);
        }
        earlier[static_cast<std::size_t>(v)].assign(mates.begin(), mates.end());
    }

    Labeling current(domain, k);
    std::uint64_t visited = 0;
    bool stop = false;
    std::function<void(Index)> dfs = [&](Index v) {
        if (stop) return;
        if (v == n) {
            ++visited;
            if (!visit(current)) stop = true;
            return;
        }
        std::uint64_t used = 0;
        for (Index u : earlier[static_cast<std::size_t>(v)]) used |= std::uint64_t{1} << current[u];
        for (int col = 0; col < k && !stop; ++col) {
            if (used >> col & 1u) continue;
            current[v] = static_cast<Color>(col);
            dfs(v + 1);
        }
    };
    dfs(0);
    return visited;
}

bool is_color_canonical(const Labeling& c) {
    int next = 0;
    std::uint64_t seen = 0;
    for (Color x : c.data()) {
        if (seen >> x & 1u) continue;
        if (x != next) return false;
        seen |= std::uint64_t{1} << x;
        ++next;
    }
    return true;
}

DichotomyReport verify_dichotomy_d2(const Torus& domain) {
    check_enumeration_size(domain, 4);
    DichotomyReport report;
    const Shift two_e0 = unit_shift(2, 0, 2), two_e1 = unit_shift(2, 1, 2);
    report.total = enumerate_polychromatic(domain, 4, [&](const Labeling& c) {
        const bool a = is_invariant(c, two_e0);
        const bool b = is_invariant(c, two_e1);
        if (a && b) ++report.both;
        else if (a) ++report.e0_only;
        else if (b) ++report.e1_only;
        else {
            ++report.violations;
            if (!report.counterexample) report.counterexample = c;
        }
        if (is_color_canonical(c)) ++report.canonical_total;
        return true;
    });
    return report;
}

}  // namespace polychrome
