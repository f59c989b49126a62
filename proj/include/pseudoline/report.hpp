#pragma once

#include <string>

#include "io.hpp"
#include "oracles.hpp"

namespace pseudoline {

/// Line-oriented search report: `#` header lines, then one record per witness
/// `<inline diagram> <mode> <minimum>`; a minimum above the cap prints as
/// `>cap`. mx-gap records carry `mx=` and `gap=` fields as well.
inline std::string format_report(const SearchReport& r) {
    std::string out = "# search " + r.kind + " n=" + std::to_string(r.n) + " cap=" + std::to_string(r.cap) +
                      "\n# examined=" + std::to_string(r.examined) + " checkpoint=" + std::to_string(r.checkpoint) +
                      " witnesses=" + std::to_string(r.witnesses.size());
    if (r.kind == "mx-gap") out += " max_gap=" + std::to_string(r.max_gap);
    out += "\n";
    for (const Witness& w : r.witnesses) {
        out += to_inline(w.diagram) + " " + to_string(w.mode) + " " +
               (w.minimum ? std::to_string(*w.minimum) : ">" + std::to_string(r.cap));
        if (r.kind == "mx-gap") out += " mx=" + std::to_string(w.mx) + " gap=" + std::to_string(*w.minimum - w.mx);
        out += "\n";
    }
    return out;
}

}  // namespace pseudoline
