#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pseudoline {

/// A block reversal: the wires at positions [top, top + width) swap order.
/// The width is the degree of the resulting crossing.
struct Event {
    int top = 0;
    int width = 2;

    auto operator<=>(const Event&) const = default;
};

class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arrangement of pseudolines drawn as an x-monotone wiring diagram.
///
/// Wires are labelled 1..n by their initial top-to-bottom position. Event i
/// sits at x-position i. Construction only checks that every event is
/// syntactically legal; whether each pair of wires crosses exactly once is
/// answered by validate().
class WiringDiagram {
public:
    WiringDiagram() = default;

    WiringDiagram(int wire_count, std::vector<Event> events)
        : wires_(wire_count), events_(std::move(events)) {
        if (wires_ < 1) throw std::invalid_argument("wiring diagram needs at least one wire");
        for (std::size_t i = 0; i < events_.size(); ++i) {
            const Event& e = events_[i];
            if (e.width < 2 || e.width > wires_ || e.top < 0 || e.top > wires_ - e.width)
                throw std::invalid_argument("event " + std::to_string(i) + " (" + std::to_string(e.top) + "," +
                                            std::to_string(e.width) + ") is out of range for " +
                                            std::to_string(wires_) + " wires");
        }
    }

    int wire_count() const noexcept { return wires_; }
    std::span<const Event> events() const noexcept { return events_; }
    std::size_t event_count() const noexcept { return events_.size(); }
    const Event& event(std::size_t i) const { return events_.at(i); }

    bool operator==(const WiringDiagram&) const = default;
    auto operator<=>(const WiringDiagram&) const = default;

private:
    int wires_ = 1;
    std::vector<Event> events_;
};

/// Per-crossing data derived by simulation.
struct CrossingInfo {
    std::size_t index = 0;
    std::vector<int> lines;  // sorted wire labels

    int degree() const noexcept { return static_cast<int>(lines.size()); }
    bool operator==(const CrossingInfo&) const = default;
};

struct PairViolation {
    int first = 0;   // smaller label
    int second = 0;  // larger label
    std::vector<std::size_t> events;  // where the pair crosses (possibly empty)

    bool operator==(const PairViolation&) const = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<PairViolation> violations;
};

/// Top-to-bottom wire order in every slab. Slab s lies between events s-1 and s,
/// so there are event_count() + 1 slabs.
inline std::vector<std::vector<int>> slab_orders(const WiringDiagram& d) {
    std::vector<std::vector<int>> slabs;
    slabs.reserve(d.event_count() + 1);
    std::vector<int> order(static_cast<std::size_t>(d.wire_count()));
    std::iota(order.begin(), order.end(), 1);
    slabs.push_back(order);
    for (const Event& e : d.events()) {
        std::reverse(order.begin() + e.top, order.begin() + e.top + e.width);
        slabs.push_back(order);
    }
    return slabs;
}

/// Calls fn(index, block) for every event, where block holds the wire labels at
/// positions [top, top + width) just before the event, top to bottom.
template <typename Fn>
void for_each_block(const WiringDiagram& d, Fn&& fn) {
    std::vector<int> order(static_cast<std::size_t>(d.wire_count()));
    std::iota(order.begin(), order.end(), 1);
    for (std::size_t i = 0; i < d.event_count(); ++i) {
        const Event& e = d.event(i);
        auto first = order.begin() + e.top;
        auto last = first + e.width;
        fn(i, std::span<const int>(&*first, static_cast<std::size_t>(e.width)));
        std::reverse(first, last);
    }
}

inline ValidationReport validate(const WiringDiagram& d) {
    const auto n = static_cast<std::size_t>(d.wire_count());
    std::vector<std::vector<std::size_t>> where(n * n);
    for_each_block(d, [&](std::size_t i, std::span<const int> block) {
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b) {
                const auto lo = static_cast<std::size_t>(std::min(block[a], block[b]) - 1);
                const auto hi = static_cast<std::size_t>(std::max(block[a], block[b]) - 1);
                where[lo * n + hi].push_back(i);
            }
    });
    ValidationReport report;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (where[a * n + b].size() != 1)
                report.violations.push_back(
                    {static_cast<int>(a + 1), static_cast<int>(b + 1), std::move(where[a * n + b])});
    report.valid = report.violations.empty();
    return report;
}

inline bool is_valid(const WiringDiagram& d) { return validate(d).valid; }

inline void require_valid(const WiringDiagram& d) {
    const ValidationReport r = validate(d);
    if (r.valid) return;
    const PairViolation& v = r.violations.front();
    throw InvalidDiagram("invalid wiring diagram: wires " + std::to_string(v.first) + " and " +
                         std::to_string(v.second) + " cross " + std::to_string(v.events.size()) + " times");
}

inline std::vector<CrossingInfo> crossings(const WiringDiagram& d) {
    require_valid(d);
    std::vector<CrossingInfo> out;
    out.reserve(d.event_count());
    for_each_block(d, [&](std::size_t i, std::span<const int> block) {
        CrossingInfo c{i, {block.begin(), block.end()}};
        std::sort(c.lines.begin(), c.lines.end());
        out.push_back(std::move(c));
    });
    return out;
}

inline bool is_simple(const WiringDiagram& d) {
    return std::all_of(d.events().begin(), d.events().end(), [](const Event& e) { return e.width == 2; });
}

/// Trivial arrangement: every wire passes through one common crossing.
inline bool is_trivial(const WiringDiagram& d) {
    return d.event_count() == 1 && d.event(0).width == d.wire_count();
}

/// Number of crossings on each wire, indexed by label - 1.
inline std::vector<int> crossings_per_wire(const WiringDiagram& d) {
    std::vector<int> count(static_cast<std::size_t>(d.wire_count()), 0);
    for_each_block(d, [&](std::size_t, std::span<const int> block) {
        for (int w : block) ++count[static_cast<std::size_t>(w - 1)];
    });
    return count;
}

/// Maximum number of crossings along any pseudoline.
inline int mx(const WiringDiagram& d) {
    require_valid(d);
    const auto count = crossings_per_wire(d);
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

/// Indices of crossings of exactly two pseudolines.
inline std::vector<std::size_t> ordinary_points(const WiringDiagram& d) {
    require_valid(d);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.event_count(); ++i)
        if (d.event(i).width == 2) out.push_back(i);
    return out;
}

/// Drops every wire not in `keep`. Kept wires are relabelled 1..m in ascending
/// order of their original labels; events left with fewer than two wires vanish.
inline WiringDiagram restrict_to(const WiringDiagram& d, std::span<const int> keep) {
    require_valid(d);
    const auto n = static_cast<std::size_t>(d.wire_count());
    std::vector<int> new_label(n + 1, 0);
    for (int w : keep) {
        if (w < 1 || w > d.wire_count()) throw std::invalid_argument("restrict: wire label out of range");
        new_label[static_cast<std::size_t>(w)] = 1;
    }
    int m = 0;
    for (std::size_t w = 1; w <= n; ++w)
        if (new_label[w] != 0) new_label[w] = ++m;
    if (m == 0) throw std::invalid_argument("restrict: keep set is empty");

    std::vector<Event> events;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (const Event& e : d.events()) {
        int above = 0;
        for (int pos = 0; pos < e.top; ++pos)
            if (new_label[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] != 0) ++above;
        int inside = 0;
        for (int pos = e.top; pos < e.top + e.width; ++pos)
            if (new_label[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] != 0) ++inside;
        if (inside >= 2) events.push_back({above, inside});
        std::reverse(order.begin() + e.top, order.begin() + e.top + e.width);
    }
    return WiringDiagram(m, std::move(events));
}

inline WiringDiagram restrict_to(const WiringDiagram& d, std::initializer_list<int> keep) {
    return restrict_to(d, std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace pseudoline
