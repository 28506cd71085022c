// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_IO_HPP
#define REDIT_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redit {

inline constexpr const char* kVersion = "0.1.0";

namespace io {

/// 6 significant digits, the table format.
std::string format_sig(double value);

std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t value);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Comment header embedded at the top of every CSV artifact.
std::string csv_meta_line(std::uint64_t seed, const std::string& config_hash);

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Self-contained SVG line plot: axes, ticks, one polyline per series, and
/// optional dashed horizontal guide lines.
std::string svg_line_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<Series>& series, const std::vector<double>& guides = {});

/// SVG of raw polylines in data coordinates with equal aspect (for region
/// and curve figures).
std::string svg_polylines(const std::string& title, const std::vector<Series>& series);

}  // namespace io
}  // namespace redit

#endif  // REDIT_IO_HPP
