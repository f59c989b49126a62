#pragma once

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "wiring_diagram.hpp"

namespace pseudoline {

struct RenderSpec {
    double wire_spacing = 40;
    double event_spacing = 48;
    double margin = 40;
    bool labels = true;
    std::vector<std::string> palette = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
                                        "#f032e6", "#bfef45", "#fabed4", "#469990", "#dcbeff", "#9a6324",
                                        "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075",
                                        "#a9a9a9", "#ffe119"};
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/// SVG drawing of the wiring diagram. Each block reversal is drawn as a fan
/// of its wires meeting at the crossing point; a crossing coloring fills the
/// crossing marks and a line coloring strokes the wires.
inline std::string render_svg(const WiringDiagram& d, const std::optional<Coloring>& coloring = std::nullopt,
                              const RenderSpec& spec = {}) {
    using detail::num;
    const int n = d.wire_count();
    const std::size_t events = d.event_count();
    if (coloring) {
        const std::size_t expected =
            coloring->mode == ColoringMode::Line ? static_cast<std::size_t>(n) : events;
        if (coloring->colors.size() != expected) throw std::invalid_argument("render: coloring does not fit diagram");
        if (static_cast<std::size_t>(coloring->color_count()) > spec.palette.size())
            throw std::invalid_argument("render: palette has " + std::to_string(spec.palette.size()) +
                                        " colors, coloring uses " + std::to_string(coloring->color_count()));
    }
    const double es = spec.event_spacing;
    const double ws = spec.wire_spacing;
    const double left = spec.margin;
    const double right = spec.margin + static_cast<double>(events + 1) * es;
    const double width = right + spec.margin;
    const double height = 2 * spec.margin + (n - 1) * ws;
    auto y_of = [&](double slot) { return spec.margin + slot * ws; };

    std::vector<std::string> paths(static_cast<std::size_t>(n));
    std::vector<int> slot(static_cast<std::size_t>(n));
    for (int w = 1; w <= n; ++w) {
        slot[static_cast<std::size_t>(w - 1)] = w - 1;
        paths[static_cast<std::size_t>(w - 1)] = num(left) + "," + num(y_of(w - 1));
    }
    std::string marks;
    for_each_block(d, [&](std::size_t i, std::span<const int> block) {
        const Event& e = d.event(i);
        const double x = left + static_cast<double>(i + 1) * es;
        const double yc = y_of(e.top + (e.width - 1) / 2.0);
        for (std::size_t j = 0; j < block.size(); ++j) {
            const auto w = static_cast<std::size_t>(block[j] - 1);
            const int before = e.top + static_cast<int>(j);
            const int after = e.top + e.width - 1 - static_cast<int>(j);
            paths[w] += " " + num(x - es / 3) + "," + num(y_of(before)) + " " + num(x) + "," + num(yc) + " " +
                        num(x + es / 3) + "," + num(y_of(after));
            slot[w] = after;
        }
        std::string fill = "#000000";
        if (coloring && coloring->mode == ColoringMode::Crossing)
            fill = spec.palette[static_cast<std::size_t>(coloring->colors[i])];
        marks += "  <circle class=\"crossing\" cx=\"" + num(x) + "\" cy=\"" + num(yc) + "\" r=\"5.00\" fill=\"" +
                 fill + "\" stroke=\"#000000\" stroke-width=\"1.00\"/>\n";
    });

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"#ffffff\"/>\n";
    for (int w = 1; w <= n; ++w) {
        const auto iw = static_cast<std::size_t>(w - 1);
        std::string stroke = "#444444";
        if (coloring && coloring->mode == ColoringMode::Line)
            stroke = spec.palette[static_cast<std::size_t>(coloring->colors[iw])];
        paths[iw] += " " + num(right) + "," + num(y_of(slot[iw]));
        svg += "  <polyline class=\"wire\" data-wire=\"" + std::to_string(w) + "\" points=\"" + paths[iw] +
               "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"2.00\"/>\n";
    }
    svg += marks;
    if (spec.labels) {
        for (int w = 1; w <= n; ++w) {
            const auto iw = static_cast<std::size_t>(w - 1);
            svg += "  <text x=\"" + num(left - 12) + "\" y=\"" + num(y_of(w - 1) + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" + std::to_string(w) +
                   "</text>\n";
            svg += "  <text x=\"" + num(right + 12) + "\" y=\"" + num(y_of(slot[iw]) + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(w) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace pseudoline
