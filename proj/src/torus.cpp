#include "polychrome/torus.hpp"

#include "polychrome/error.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

namespace polychrome {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::sizing: return "sizing";
        case ErrorKind::format: return "format";
        case ErrorKind::io: return "io";
        case ErrorKind::verification: return "verification";
    }
    return "unknown";
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Torus::Torus(std::vector<std::int64_t> sides) : sides_(std::move(sides)) {
    require(!sides_.empty() && static_cast<int>(sides_.size()) <= kMaxDim,
            "torus dimension must be between 1 and " + std::to_string(kMaxDim) + ", got " +
                std::to_string(sides_.size()));
    strides_.assign(sides_.size(), 1);
    size_ = 1;
    for (std::size_t i = sides_.size(); i-- > 0;) {
        const std::int64_t s = sides_[i];
        require(s >= 4 && s % 2 == 0,
                "torus side " + std::to_string(i) + " must be even and >= 4, got " + std::to_string(s));
        strides_[i] = size_;
        require(size_ <= std::numeric_limits<std::int32_t>::max() / s,
                "torus " + describe() + " has too many vertices");
        size_ *= s;
    }
}

std::int64_t Torus::diameter() const noexcept {
    std::int64_t total = 0;
    for (auto s : sides_) total += s / 2;
    return total;
}

Vertex Torus::coords(Index v) const {
    Vertex out(sides_.size());
    for (int i = 0; i < dim(); ++i) out[static_cast<std::size_t>(i)] = coord(v, i);
    return out;
}

Index Torus::index(std::span<const std::int64_t> c) const {
    require(static_cast<int>(c.size()) == dim(), "coordinate vector has wrong dimension");
    Index v = 0;
    for (int i = 0; i < dim(); ++i) v += floor_mod(c[static_cast<std::size_t>(i)], side(i)) * stride(i);
    return v;
}

Index Torus::act(Index v, std::span<const std::int64_t> g) const {
    require(static_cast<int>(g.size()) == dim(), "shift vector has wrong dimension");
    Index out = 0;
    for (int i = 0; i < dim(); ++i)
        out += floor_mod(coord(v, i) + g[static_cast<std::size_t>(i)], side(i)) * stride(i);
    return out;
}

Index Torus::step(Index v, int axis, std::int64_t delta) const {
    const std::int64_t c = coord(v, axis);
    return v + (floor_mod(c + delta, side(axis)) - c) * stride(axis);
}

std::array<Index, kMaxDim> Torus::unit_offsets(Index base) const {
    std::array<Index, kMaxDim> off{};
    for (int i = 0; i < dim(); ++i)
        off[static_cast<std::size_t>(i)] =
            coord(base, i) == side(i) - 1 ? -(side(i) - 1) * stride(i) : stride(i);
    return off;
}

std::vector<Index> Torus::cube_at(Index base) const {
    const auto off = unit_offsets(base);
    std::vector<Index> out(static_cast<std::size_t>(cube_size()));
    for (CubeOffset eps = 0; eps < static_cast<CubeOffset>(cube_size()); ++eps) {
        Index v = base;
        for (int i = 0; i < dim(); ++i)
            if (eps >> i & 1u) v += off[static_cast<std::size_t>(i)];
        out[eps] = v;
    }
    return out;
}

std::int64_t Torus::distance(Index a, Index b) const {
    std::int64_t total = 0;
    for (int i = 0; i < dim(); ++i) {
        const std::int64_t delta = std::llabs(coord(a, i) - coord(b, i));
        total += std::min(delta, side(i) - delta);
    }
    return total;
}

std::string Torus::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < sides_.size(); ++i) os << (i ? "x" : "") << sides_[i];
    return os.str();
}

std::vector<std::int64_t> parse_sides(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find('x', pos);
        const std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (part.empty()) fail(ErrorKind::precondition, "cannot parse sides '" + text + "'");
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size()) fail(ErrorKind::precondition, "cannot parse sides '" + text + "'");
        out.push_back(value);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Shift unit_shift(int d, int axis, std::int64_t amount) {
    Shift g(static_cast<std::size_t>(d), 0);
    g[static_cast<std::size_t>(axis)] = amount;
    return g;
}

}  // namespace polychrome
