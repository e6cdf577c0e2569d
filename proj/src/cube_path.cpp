#include "polychrome/cube_path.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <deque>

namespace polychrome {

namespace {

std::vector<int> color_counts(const CubeLabeling& c) {
    std::vector<int> counts(static_cast<std::size_t>(c.color_count()), 0);
    for (Color x : c.values) ++counts[x];
    return counts;
}

void require_surjective(const CubeLabeling& c, const char* which) {
    require(is_surjective(c), std::string(which) + " cube labeling is not surjective onto " +
                                  std::to_string(c.color_count()) + " colours");
}

// Labelings of a d <= 3 cube encoded in base (2^d - 1), vertex 0 least significant.
struct Codec {
    int d;
    int base;
    int digits;
    std::int64_t states;

    explicit Codec(int dim) : d(dim), base((1 << dim) - 1), digits(1 << dim), states(1) {
        for (int i = 0; i < digits; ++i) states *= base;
    }
    std::int64_t encode(const CubeLabeling& c) const {
        std::int64_t code = 0;
        for (int i = digits; i-- > 0;) code = code * base + c.values[static_cast<std::size_t>(i)];
        return code;
    }
    CubeLabeling decode(std::int64_t code) const {
        std::vector<Color> v(static_cast<std::size_t>(digits));
        for (int i = 0; i < digits; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<Color>(code % base);
            code /= base;
        }
        return CubeLabeling(d, std::move(v));
    }
};

}  // namespace

CubeLabeling::CubeLabeling(int dim, std::vector<Color> vals) : d(dim), values(std::move(vals)) {
    require(dim >= 1 && dim <= kMaxDim, "cube dimension out of range");
    require(static_cast<int>(values.size()) == (1 << dim),
            "cube labeling needs " + std::to_string(1 << dim) + " values, got " + std::to_string(values.size()));
    for (Color x : values)
        require(x < color_count(), "cube colour " + std::to_string(x) + " is not below " +
                                       std::to_string(color_count()));
}

bool is_surjective(const CubeLabeling& c) {
    const auto counts = color_counts(c);
    return std::all_of(counts.begin(), counts.end(), [](int n) { return n > 0; });
}

int hamming(const CubeLabeling& a, const CubeLabeling& b) {
    int n = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) n += a.values[i] != b.values[i];
    return n;
}

ConnectTrace connect_trace(const CubeLabeling& cA, const CubeLabeling& cB) {
    require(cA.d == cB.d, "cube labelings have different dimensions");
    require_surjective(cA, "source");
    require_surjective(cB, "target");
    const int n = cA.vertex_count();

    // Counter order, then the smallest vertex carrying cB's repeated colour is
    // moved into the last slot.
    ConnectTrace trace;
    trace.order.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) trace.order[static_cast<std::size_t>(j)] = j;
    const auto target_counts = color_counts(cB);
    for (int u = 0; u < n; ++u) {
        if (target_counts[cB[static_cast<std::size_t>(u)]] > 1) {
            std::swap(trace.order[static_cast<std::size_t>(u)], trace.order.back());
            break;
        }
    }
    auto vertex = [&](int j) { return static_cast<std::size_t>(trace.order[static_cast<std::size_t>(j)]); };

    CubeLabeling cur = cA;
    trace.steps.push_back(cur);
    for (int i = 0; i < n; ++i) {
        const auto counts = color_counts(cur);
        int k = -1;
        for (int j = n - 1; j >= i; --j) {
            if (counts[cur[vertex(j)]] > 1) {
                k = j;
                break;
            }
        }
        // Colours on v_0..v_{i-1} already equal cB there and are pairwise distinct.
        if (k < 0) fail(ErrorKind::verification, "connect: no repeated colour at or after position " + std::to_string(i));
        cur.values[vertex(k)] = cur[vertex(i)];
        trace.steps.push_back(cur);
        cur.values[vertex(i)] = cB[vertex(i)];
        trace.steps.push_back(cur);
    }
    return trace;
}

LabelingPath connect(const CubeLabeling& cA, const CubeLabeling& cB) {
    const auto trace = connect_trace(cA, cB);
    LabelingPath path;
    for (const auto& c : trace.steps) {
        auto seen = std::find(path.begin(), path.end(), c);
        if (seen != path.end())
            path.erase(seen + 1, path.end());  // drops no-ops and closed detours alike
        else
            path.push_back(c);
    }
    return path;
}

std::vector<CubeLabeling> all_surjective(int d) {
    require(d >= 1 && d <= 3, "all_surjective: exhaustive enumeration needs d <= 3");
    const Codec codec(d);
    std::vector<CubeLabeling> out;
    for (std::int64_t code = 0; code < codec.states; ++code) {
        auto c = codec.decode(code);
        if (is_surjective(c)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.values < b.values; });
    return out;
}

LabelingPath bfs_shortest_path(const CubeLabeling& cA, const CubeLabeling& cB) {
    require(cA.d == cB.d, "cube labelings have different dimensions");
    require(cA.d <= 3, "bfs_shortest_path: state space is only enumerated for d <= 3");
    require_surjective(cA, "source");
    require_surjective(cB, "target");
    const Codec codec(cA.d);
    const std::int64_t start = codec.encode(cA);
    const std::int64_t goal = codec.encode(cB);

    std::vector<std::int32_t> parent(static_cast<std::size_t>(codec.states), -1);
    std::deque<std::int64_t> queue{start};
    parent[static_cast<std::size_t>(start)] = static_cast<std::int32_t>(start);
    while (!queue.empty() && parent[static_cast<std::size_t>(goal)] < 0) {
        const std::int64_t code = queue.front();
        queue.pop_front();
        const CubeLabeling cur = codec.decode(code);
        const auto counts = color_counts(cur);
        std::int64_t place = 1;
        for (int v = 0; v < codec.digits; ++v, place *= codec.base) {
            const Color old = cur[static_cast<std::size_t>(v)];
            if (counts[old] < 2) continue;  // recolouring would lose `old`
            for (int col = 0; col < codec.base; ++col) {
                if (col == old) continue;
                const std::int64_t next = code + (col - old) * place;
                if (parent[static_cast<std::size_t>(next)] >= 0) continue;
                parent[static_cast<std::size_t>(next)] = static_cast<std::int32_t>(code);
                queue.push_back(next);
            }
        }
    }
    if (parent[static_cast<std::size_t>(goal)] < 0)
        fail(ErrorKind::verification, "bfs_shortest_path: target unreachable");
    LabelingPath path;
    for (std::int64_t code = goal;; code = parent[static_cast<std::size_t>(code)]) {
        path.push_back(codec.decode(code));
        if (code == start) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::string path_problem(const LabelingPath& path, const CubeLabeling& from, const CubeLabeling& to) {
    if (path.empty()) return "path is empty";
    if (path.front() != from) return "path does not start at the source labeling";
    if (path.back() != to) return "path does not end at the target labeling";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!is_surjective(path[i])) return "entry " + std::to_string(i) + " is not surjective";
        if (i > 0 && hamming(path[i - 1], path[i]) > 1)
            return "entries " + std::to_string(i - 1) + " and " + std::to_string(i) + " differ on more than one vertex";
    }
    const std::size_t bound = (std::size_t{1} << (from.d + 1)) + 1;
    if (path.size() > bound)
        return "path has " + std::to_string(path.size()) + " entries, bound is " + std::to_string(bound);
    return {};
}

}  // namespace polychrome
