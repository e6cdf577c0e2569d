#pragma once

// JSON file formats. Every document carries "format_version".
//
//   labeling : {"d", "sides", "k", "data"}   data row-major, last coordinate fastest
//   toast    : {"d", "sides", "r", "pieces": [{"id", "parent", "box": [[lo,hi],...]}
//                                          | {"id", "parent", "cells": [[x0,..],...]}]}
//              box bounds are inclusive; parent is null for the top piece
//   tuple    : {"d", "sides", "tuple": [data, data, ...]}  one 2-colouring per axis
//   cube     : bare array of 2^d colours, indexed by the d-bit cube offset

#include "polychrome/cube_path.hpp"
#include "polychrome/labeling.hpp"
#include "polychrome/toast.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polychrome::io {

inline constexpr int kFormatVersion = 1;

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

nlohmann::json parse(const std::string& text, const std::string& what);

/// Serialised labeling; data is streamed so large tori do not build a DOM.
std::string labeling_to_string(const Labeling& c);
Labeling labeling_from_json(const nlohmann::json& j);
Labeling read_labeling(const std::string& path);
void write_labeling(const std::string& path, const Labeling& c);

nlohmann::json toast_to_json(const Toast& t);
Toast toast_from_json(const nlohmann::json& j);
Toast read_toast(const std::string& path);
void write_toast(const std::string& path, const Toast& t);

nlohmann::json cube_to_json(const CubeLabeling& c);
CubeLabeling cube_from_json(const nlohmann::json& j);
CubeLabeling read_cube(const std::string& path);

nlohmann::json path_to_json(const LabelingPath& path);

nlohmann::json tuple_to_json(const std::vector<Labeling>& tuple);
std::vector<Labeling> tuple_from_json(const nlohmann::json& j);

}  // namespace polychrome::io
