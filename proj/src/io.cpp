// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "redit/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace redit::io {

std::string format_sig(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string csv_meta_line(std::uint64_t seed, const std::string& config_hash) {
    std::string line = "# redit ";
    line += kVersion;
    line += " seed=";
    line += std::to_string(seed);
    line += " config=";
    line += config_hash;
    line += "\n";
    return line;
}

namespace {

struct Bounds {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -std::numeric_limits<double>::infinity();
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();

    void include(double x, double y) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }

    void pad() {
        if (!(x_max > x_min)) {
            x_min -= 1.0;
            x_max += 1.0;
        }
        if (!(y_max > y_min)) {
            y_min -= 1.0;
            y_max += 1.0;
        }
        const double dx = 0.05 * (x_max - x_min);
        const double dy = 0.05 * (y_max - y_min);
        x_min -= dx;
        x_max += dx;
        y_min -= dy;
        y_max += dy;
    }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string xml_escape(const std::string& text) {
    std::string out;
    for (const char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<Series>& series, const std::vector<double>& guides) {
    constexpr int width = 720, height = 480;
    constexpr int ml = 70, mr = 20, mt = 40, mb = 50;
    Bounds b;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) b.include(x, y);
    for (const double g : guides) b.include(b.x_min, g);
    b.pad();

    const auto px = [&](double x) { return ml + (x - b.x_min) / (b.x_max - b.x_min) * (width - ml - mr); };
    const auto py = [&](double y) { return height - mb - (y - b.y_min) / (b.y_max - b.y_min) * (height - mt - mb); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title)
        << "</text>\n";
    // Axes.
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr << "\" y2=\"" << height - mb
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << height - mb
        << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double x = b.x_min + t * (b.x_max - b.x_min) / 4.0;
        const double y = b.y_min + t * (b.y_max - b.y_min) / 4.0;
        svg << "<text x=\"" << px(x) << "\" y=\"" << height - mb + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
            << format_sig(x) << "</text>\n";
        svg << "<text x=\"" << ml - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
            << format_sig(y) << "</text>\n";
    }
    svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(x_label) << "</text>\n";
    svg << "<text x=\"16\" y=\"" << (mt + height - mb) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 16 " << (mt + height - mb) / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
    for (const double g : guides) {
        svg << "<line x1=\"" << ml << "\" y1=\"" << py(g) << "\" x2=\"" << width - mr << "\" y2=\"" << py(g)
            << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
    }
    int color = 0;
    for (const auto& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 6] << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) svg << px(x) << "," << py(y) << " ";
        svg << "\"/>\n";
        if (!s.label.empty()) {
            svg << "<text x=\"" << width - mr - 8 << "\" y=\"" << mt + 16 * (color + 1)
                << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << kPalette[color % 6] << "\">"
                << xml_escape(s.label) << "</text>\n";
        }
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string svg_polylines(const std::string& title, const std::vector<Series>& series) {
    constexpr int width = 560, height = 560;
    constexpr int margin = 40;
    Bounds b;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) b.include(x, y);
    b.pad();
    // Equal aspect: one scale for both axes.
    const double scale =
        std::min((width - 2.0 * margin) / (b.x_max - b.x_min), (height - 2.0 * margin) / (b.y_max - b.y_min));
    const auto px = [&](double x) { return margin + (x - b.x_min) * scale; };
    const auto py = [&](double y) { return height - margin - (y - b.y_min) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title)
        << "</text>\n";
    int color = 0;
    for (const auto& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 6] << "\" stroke-width=\"1.2\" points=\"";
        for (const auto& [x, y] : s.points) svg << px(x) << "," << py(y) << " ";
        svg << "\"/>\n";
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace redit::io
