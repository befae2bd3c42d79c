#include "qpart/bijection.hpp"

#include <algorithm>

#include "qpart/errors.hpp"

namespace qpart {

std::vector<std::vector<ColoredPart>> maximal_runs(const ColoredPartition& p) {
    std::vector<std::vector<ColoredPart>> runs;
    for (const auto& part : p.parts) {
        if (runs.empty() || runs.back().back().value != part.value + 1) {
            runs.push_back({part});
        } else {
            runs.back().push_back(part);
        }
    }
    return runs;
}

Overpartition colored_to_over(const ColoredPartition& p) {
    if (!is_valid_2crr(p)) {
        throw PreconditionError("colored_to_over: input is not a valid 2-colored partition");
    }
    Overpartition out;
    for (const auto& run : maximal_runs(p)) {
        for (std::size_t j = 0; j + 1 < run.size(); ++j) {
            out.parts.push_back(OverPart{run[j].value, true});
        }
        const auto& low = run.back();
        out.parts.push_back(OverPart{low.value, low.color == Color::Black});
    }
    // Parts of distinct runs interleave only at run boundaries, where values
    // are still strictly decreasing, so the list is already sorted.
    return out;
}

ColoredPartition over_to_colored(const Overpartition& p) {
    if (!is_valid_D(p, 2, 2)) {
        throw PreconditionError("over_to_colored: input is not a valid overpartition in the target family");
    }
    // Parts are distinct here (the gap condition with k = 2 forbids repeats),
    // so runs of consecutive values can be read off directly.  The smallest
    // part of each run takes Black iff overlined and colors alternate upward.
    ColoredPartition out;
    std::size_t i = 0;
    while (i < p.parts.size()) {
        std::size_t j = i;
        while (j + 1 < p.parts.size() && p.parts[j + 1].value == p.parts[j].value - 1) ++j;
        Color c = p.parts[j].overlined ? Color::Black : Color::Red;
        for (std::size_t t = j + 1; t-- > i;) {
            out.parts.push_back(ColoredPart{p.parts[t].value, c});
            c = (c == Color::Black) ? Color::Red : Color::Black;
        }
        i = j + 1;
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const ColoredPart& a, const ColoredPart& b) { return a.value > b.value; });
    return out;
}

} // namespace qpart
