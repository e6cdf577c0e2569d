#include "polychrome/render.hpp"

#include "polychrome/error.hpp"

#include <array>
#include <sstream>

namespace polychrome {

namespace {

constexpr std::string_view kGlyphs = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

constexpr std::array<const char*, 12> kPalette = {
    "#0000ff", "#ff0000", "#984ea3", "#4daf4a", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#8da0cb", "#e78ac3",
};

void require_planar(const Labeling& c) {
    require(c.domain().dim() == 2, "render needs a d=2 labeling, got d=" + std::to_string(c.domain().dim()));
}

}  // namespace

std::string render_ascii(const Labeling& c) {
    require_planar(c);
    require(c.k() <= static_cast<int>(kGlyphs.size()), "too many colours for ASCII rendering");
    const auto& domain = c.domain();
    std::string out;
    for (std::int64_t y = domain.side(1); y-- > 0;) {
        for (std::int64_t x = 0; x < domain.side(0); ++x) out += kGlyphs[c.at({x, y})];
        out += '\n';
    }
    return out;
}

std::string render_svg(const Labeling& c) {
    require_planar(c);
    constexpr int cell = 24;
    constexpr int margin = 12;
    const auto& domain = c.domain();
    const std::int64_t w = domain.side(0), h = domain.side(1);
    const std::int64_t width = 2 * margin + (w - 1) * cell, height = 2 * margin + (h - 1) * cell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    for (std::int64_t x = 0; x < w; ++x)
        os << "<line x1=\"" << margin + x * cell << "\" y1=\"" << margin << "\" x2=\"" << margin + x * cell << "\" y2=\""
           << margin + (h - 1) * cell << "\"/>\n";
    for (std::int64_t y = 0; y < h; ++y)
        os << "<line x1=\"" << margin << "\" y1=\"" << margin + y * cell << "\" x2=\"" << margin + (w - 1) * cell
           << "\" y2=\"" << margin + y * cell << "\"/>\n";
    os << "</g>\n";
    for (std::int64_t y = 0; y < h; ++y) {
        for (std::int64_t x = 0; x < w; ++x) {
            const Color col = c.at({x, y});
            os << "<circle cx=\"" << margin + x * cell << "\" cy=\"" << margin + (h - 1 - y) * cell << "\" r=\"6\" fill=\""
               << kPalette[col % kPalette.size()] << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace polychrome
