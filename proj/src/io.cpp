#include "polychrome/io.hpp"

#include "polychrome/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace polychrome::io {

using nlohmann::json;

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::io, "cannot open '" + path + "' for writing");
    out << text;
    if (!out) fail(ErrorKind::io, "failed writing '" + path + "'");
}

json parse(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::format, what + ": invalid JSON: " + e.what());
    }
}

namespace {

void check_version(const json& j, const std::string& what) {
    if (!j.is_object()) fail(ErrorKind::format, what + ": expected a JSON object");
    if (!j.contains("format_version")) fail(ErrorKind::format, what + ": missing format_version");
    const auto& v = j.at("format_version");
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
        fail(ErrorKind::format, what + ": unsupported format_version " + v.dump() + " (expected " +
                                    std::to_string(kFormatVersion) + ")");
}

template <class T>
T field(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) fail(ErrorKind::format, what + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(ErrorKind::format, what + ": field '" + key + "' has the wrong type");
    }
}

// Torus construction failures in a file are format problems, not caller bugs.
Torus torus_from(const json& j, const std::string& what) {
    const auto d = field<int>(j, "d", what);
    const auto sides = field<std::vector<std::int64_t>>(j, "sides", what);
    if (static_cast<int>(sides.size()) != d)
        fail(ErrorKind::format, what + ": d=" + std::to_string(d) + " but " + std::to_string(sides.size()) + " sides given");
    try {
        return Torus(sides);
    } catch (const Error& e) {
        fail(ErrorKind::format, what + ": " + e.what());
    }
}

std::vector<Color> colors_from(const json& arr, int k, const std::string& what) {
    if (!arr.is_array()) fail(ErrorKind::format, what + ": data must be an array");
    std::vector<Color> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() >= k)
            fail(ErrorKind::format, what + ": colour " + x.dump() + " outside [0," + std::to_string(k) + ")");
        out.push_back(static_cast<Color>(x.get<int>()));
    }
    return out;
}

}  // namespace

std::string labeling_to_string(const Labeling& c) {
    const auto& domain = c.domain();
    std::string out = "{\"d\":" + std::to_string(domain.dim()) + ",\"data\":[";
    out.reserve(out.size() + c.data().size() * 2 + 64);
    bool first = true;
    for (Color x : c.data()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(static_cast<int>(x));
    }
    out += "],\"format_version\":" + std::to_string(kFormatVersion) + ",\"k\":" + std::to_string(c.k()) +
           ",\"sides\":" + json(domain.sides()).dump() + "}\n";
    return out;
}

Labeling labeling_from_json(const json& j) {
    const std::string what = "labeling";
    check_version(j, what);
    const Torus domain = torus_from(j, what);
    const int k = field<int>(j, "k", what);
    if (k < 1 || k > 255) fail(ErrorKind::format, what + ": k must be in [1,255]");
    if (!j.contains("data")) fail(ErrorKind::format, what + ": missing field 'data'");
    auto data = colors_from(j.at("data"), k, what);
    if (static_cast<Index>(data.size()) != domain.size())
        fail(ErrorKind::format, what + ": data has " + std::to_string(data.size()) + " entries, torus " + domain.describe() +
                                    " has " + std::to_string(domain.size()));
    return Labeling(domain, k, std::move(data));
}

Labeling read_labeling(const std::string& path) { return labeling_from_json(parse(read_text(path), path)); }

void write_labeling(const std::string& path, const Labeling& c) { write_text(path, labeling_to_string(c)); }

json toast_to_json(const Toast& t) {
    const auto& domain = t.domain();
    json pieces = json::array();
    for (const auto& p : t.pieces()) {
        json jp{{"id", p.id}, {"parent", p.parent ? json(*p.parent) : json(nullptr)}};
        if (const auto* box = std::get_if<Box>(&p.shape)) {
            json axes = json::array();
            for (std::size_t i = 0; i < box->lo.size(); ++i) axes.push_back({box->lo[i], box->hi[i]});
            jp["box"] = axes;
        } else {
            json cells = json::array();
            for (Index v : std::get<std::vector<Index>>(p.shape)) cells.push_back(domain.coords(v));
            jp["cells"] = cells;
        }
        pieces.push_back(jp);
    }
    return json{{"format_version", kFormatVersion}, {"d", domain.dim()}, {"sides", domain.sides()},
                {"r", t.r()},                       {"pieces", pieces}};
}

Toast toast_from_json(const json& j) {
    const std::string what = "toast";
    check_version(j, what);
    const Torus domain = torus_from(j, what);
    const int r = field<int>(j, "r", what);
    if (!j.contains("pieces") || !j.at("pieces").is_array()) fail(ErrorKind::format, what + ": pieces must be an array");
    std::vector<ToastPiece> pieces;
    for (const auto& jp : j.at("pieces")) {
        ToastPiece p;
        p.id = field<int>(jp, "id", what);
        const std::string where = what + " piece " + std::to_string(p.id);
        if (jp.contains("parent") && !jp.at("parent").is_null()) p.parent = field<int>(jp, "parent", where);
        const bool has_box = jp.contains("box"), has_cells = jp.contains("cells");
        if (has_box == has_cells) fail(ErrorKind::format, where + ": exactly one of 'box' or 'cells' is required");
        if (has_box) {
            const auto axes = field<std::vector<std::vector<std::int64_t>>>(jp, "box", where);
            if (static_cast<int>(axes.size()) != domain.dim()) fail(ErrorKind::format, where + ": box has wrong dimension");
            Box box;
            for (const auto& a : axes) {
                if (a.size() != 2) fail(ErrorKind::format, where + ": box axis must be [lo,hi]");
                box.lo.push_back(a[0]);
                box.hi.push_back(a[1]);
            }
            p.shape = box;
        } else {
            const auto cells = field<std::vector<std::vector<std::int64_t>>>(jp, "cells", where);
            std::vector<Index> members;
            for (const auto& x : cells) {
                if (static_cast<int>(x.size()) != domain.dim()) fail(ErrorKind::format, where + ": cell has wrong dimension");
                for (int i = 0; i < domain.dim(); ++i)
                    if (x[static_cast<std::size_t>(i)] < 0 || x[static_cast<std::size_t>(i)] >= domain.side(i))
                        fail(ErrorKind::format, where + ": cell coordinate out of range");
                members.push_back(domain.index(x));
            }
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            p.shape = std::move(members);
        }
        pieces.push_back(std::move(p));
    }
    return Toast(domain, r, std::move(pieces));
}

Toast read_toast(const std::string& path) { return toast_from_json(parse(read_text(path), path)); }

void write_toast(const std::string& path, const Toast& t) { write_text(path, toast_to_json(t).dump() + "\n"); }

json cube_to_json(const CubeLabeling& c) {
    json arr = json::array();
    for (Color x : c.values) arr.push_back(static_cast<int>(x));
    return arr;
}

CubeLabeling cube_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::format, "cube labeling must be a JSON array");
    int d = 0;
    while (d <= kMaxDim && (std::size_t{1} << d) != j.size()) ++d;
    if (d < 1 || d > kMaxDim)
        fail(ErrorKind::format, "cube labeling length " + std::to_string(j.size()) + " is not 2^d for 1 <= d <= " +
                                    std::to_string(kMaxDim));
    const auto values = colors_from(j, (1 << d) - 1, "cube labeling");
    return CubeLabeling(d, values);
}

CubeLabeling read_cube(const std::string& path) { return cube_from_json(parse(read_text(path), path)); }

json path_to_json(const LabelingPath& path) {
    json arr = json::array();
    for (const auto& c : path) arr.push_back(cube_to_json(c));
    return arr;
}

json tuple_to_json(const std::vector<Labeling>& tuple) {
    require(!tuple.empty(), "empty tuple");
    const auto& domain = tuple.front().domain();
    json data = json::array();
    for (const auto& c : tuple) data.push_back(c.data());
    return json{{"format_version", kFormatVersion}, {"d", domain.dim()}, {"sides", domain.sides()}, {"tuple", data}};
}

std::vector<Labeling> tuple_from_json(const json& j) {
    const std::string what = "tuple";
    check_version(j, what);
    const Torus domain = torus_from(j, what);
    if (!j.contains("tuple") || !j.at("tuple").is_array()) fail(ErrorKind::format, what + ": tuple must be an array");
    std::vector<Labeling> out;
    for (const auto& arr : j.at("tuple")) {
        auto data = colors_from(arr, 2, what);
        if (static_cast<Index>(data.size()) != domain.size()) fail(ErrorKind::format, what + ": member has wrong size");
        out.emplace_back(domain, 2, std::move(data));
    }
    if (static_cast<int>(out.size()) != domain.dim()) fail(ErrorKind::format, what + ": need one member per axis");
    return out;
}

}  // namespace polychrome::io
