#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coloring.hpp"
#include "wiring_diagram.hpp"

namespace pseudoline {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

inline std::vector<long long> integers(const std::string& line, std::size_t expected, const std::string& what) {
    std::istringstream in(line);
    std::vector<long long> values;
    for (std::string tok; in >> tok;) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(what + ": '" + tok + "' is not an integer");
        }
        if (used != tok.size()) throw ParseError(what + ": '" + tok + "' is not an integer");
        values.push_back(v);
    }
    if (values.size() != expected)
        throw ParseError(what + ": expected " + std::to_string(expected) + " fields in '" + line + "'");
    return values;
}

inline WiringDiagram checked_diagram(long long n, std::vector<Event> events) {
    if (n < 1 || n > 1'000'000) throw ParseError("wire count " + std::to_string(n) + " out of range");
    try {
        return WiringDiagram(static_cast<int>(n), std::move(events));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline int narrow(long long v, const std::string& what) {
    if (v < -1'000'000'000LL || v > 1'000'000'000LL) throw ParseError(what + " out of range");
    return static_cast<int>(v);
}

}  // namespace detail

/// `.wd` text: the wire count, then one `top width` line per event.
inline std::string to_wd(const WiringDiagram& d) {
    std::string out = std::to_string(d.wire_count()) + "\n";
    for (const Event& e : d.events()) out += std::to_string(e.top) + " " + std::to_string(e.width) + "\n";
    return out;
}

inline WiringDiagram parse_wd(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("wd: missing wire count");
    const long long n = detail::integers(lines[0], 1, "wd header")[0];
    std::vector<Event> events;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto v = detail::integers(lines[i], 2, "wd event");
        events.push_back({detail::narrow(v[0], "event top"), detail::narrow(v[1], "event width")});
    }
    return detail::checked_diagram(n, std::move(events));
}

/// Single-line form used in reports: `n:top,width;top,width;...`.
inline std::string to_inline(const WiringDiagram& d) {
    std::string out = std::to_string(d.wire_count()) + ":";
    for (std::size_t i = 0; i < d.event_count(); ++i) {
        if (i) out += ";";
        out += std::to_string(d.event(i).top) + "," + std::to_string(d.event(i).width);
    }
    return out;
}

inline WiringDiagram parse_inline(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("inline diagram: missing ':'");
    const long long n = detail::integers(std::string(text.substr(0, colon)), 1, "inline wire count")[0];
    std::vector<Event> events;
    std::string rest(text.substr(colon + 1));
    std::istringstream in(rest);
    for (std::string item; std::getline(in, item, ';');) {
        for (char& ch : item)
            if (ch == ',') ch = ' ';
        const auto v = detail::integers(item, 2, "inline event");
        events.push_back({detail::narrow(v[0], "event top"), detail::narrow(v[1], "event width")});
    }
    return detail::checked_diagram(n, std::move(events));
}

inline std::string to_string(ColoringMode m) { return m == ColoringMode::Crossing ? "crossing" : "line"; }

/// Coloring text: header `mode items K`, then `index color` per item. Crossings
/// are indexed by event (from 0), lines by wire label (from 1).
inline std::string to_coloring_text(const Coloring& c) {
    std::string out = to_string(c.mode) + " " + std::to_string(c.colors.size()) + " " +
                      std::to_string(c.color_count()) + "\n";
    const std::size_t base = c.mode == ColoringMode::Line ? 1 : 0;
    for (std::size_t i = 0; i < c.colors.size(); ++i)
        out += std::to_string(i + base) + " " + std::to_string(c.colors[i]) + "\n";
    return out;
}

inline Coloring parse_coloring(std::string_view text) {
    const auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("coloring: missing header");
    std::istringstream head(lines[0]);
    std::string mode_name;
    head >> mode_name;
    std::string counts;
    std::getline(head, counts);
    Coloring c;
    if (mode_name == "crossing") c.mode = ColoringMode::Crossing;
    else if (mode_name == "line") c.mode = ColoringMode::Line;
    else throw ParseError("coloring: unknown mode '" + mode_name + "'");
    const auto hv = detail::integers(counts, 2, "coloring header");
    if (hv[0] < 0 || hv[0] > 100'000'000) throw ParseError("coloring: bad item count");
    const auto items = static_cast<std::size_t>(hv[0]);
    if (lines.size() != items + 1) throw ParseError("coloring: expected " + std::to_string(items) + " entries");
    const long long base = c.mode == ColoringMode::Line ? 1 : 0;
    c.colors.assign(items, -1);
    for (std::size_t i = 0; i < items; ++i) {
        const auto v = detail::integers(lines[i + 1], 2, "coloring entry");
        const long long idx = v[0] - base;
        if (idx < 0 || idx >= static_cast<long long>(items)) throw ParseError("coloring: index out of range");
        if (c.colors[static_cast<std::size_t>(idx)] != -1) throw ParseError("coloring: duplicate index");
        if (v[1] < 0) throw ParseError("coloring: negative color");
        c.colors[static_cast<std::size_t>(idx)] = detail::narrow(v[1], "color");
    }
    if (c.color_count() != hv[1]) throw ParseError("coloring: header says K = " + std::to_string(hv[1]));
    return c;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace pseudoline
