#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "../wiring_diagram.hpp"

namespace pseudoline::detail {

using Rational = boost::multiprecision::cpp_rational;

/// Non-vertical straight line y = slope * x + intercept.
struct Line {
    Rational slope;
    Rational intercept;

    static Line through(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
        if (x0 == x1) throw std::invalid_argument("vertical line");
        Rational m = (y1 - y0) / (x1 - x0);
        return {m, y0 - m * x0};
    }
};

struct LineWiring {
    WiringDiagram diagram;
    std::vector<int> label;  // label[i] = wire label of input line i
};

/// Converts a line arrangement with pairwise distinct slopes into its wiring
/// diagram. Concurrent lines become one event; crossings at equal x are
/// serialized top to bottom. Wires are labelled by slope, ascending, which is
/// the top-to-bottom order at x -> -infinity.
inline LineWiring wiring_from_lines(const std::vector<Line>& lines) {
    const std::size_t n = lines.size();
    if (n == 0) throw std::invalid_argument("no lines");
    std::vector<std::size_t> by_slope(n);
    std::iota(by_slope.begin(), by_slope.end(), std::size_t{0});
    std::sort(by_slope.begin(), by_slope.end(),
              [&](std::size_t a, std::size_t b) { return lines[a].slope < lines[b].slope; });
    LineWiring out;
    out.label.assign(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) out.label[by_slope[pos]] = static_cast<int>(pos + 1);

    // crossing point (x, -y) -> lines through it; -y makes higher points sort first
    std::map<std::pair<Rational, Rational>, std::vector<int>> points;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (lines[a].slope == lines[b].slope) throw std::invalid_argument("parallel lines");
            Rational x = (lines[b].intercept - lines[a].intercept) / (lines[a].slope - lines[b].slope);
            Rational y = lines[a].slope * x + lines[a].intercept;
            auto& through = points[{x, -y}];
            through.push_back(out.label[a]);
            through.push_back(out.label[b]);
        }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::vector<Event> events;
    for (auto& [pt, through] : points) {
        std::sort(through.begin(), through.end());
        through.erase(std::unique(through.begin(), through.end()), through.end());
        std::vector<int> pos;
        for (int w : through)
            pos.push_back(static_cast<int>(std::find(order.begin(), order.end(), w) - order.begin()));
        const auto [lo, hi] = std::minmax_element(pos.begin(), pos.end());
        const int top = *lo;
        const int width = *hi - *lo + 1;
        if (width != static_cast<int>(through.size())) throw std::logic_error("concurrent lines not adjacent");
        std::reverse(order.begin() + top, order.begin() + top + width);
        events.push_back({top, width});
    }
    out.diagram = WiringDiagram(static_cast<int>(n), std::move(events));
    return out;
}

}  // namespace pseudoline::detail
