#pragma once

#include <vector>

#include "qpart/overpartitions.hpp"
#include "qpart/partitions.hpp"

namespace qpart {

// Maximal runs of consecutive values in a colored partition.  Each run is a
// descending block v, v-1, ..., w; runs are returned largest-first.  Within a
// valid partition colors alternate along each run, so the run is determined
// by its value interval and the color of its smallest part.
std::vector<std::vector<ColoredPart>> maximal_runs(const ColoredPartition& p);

// Map a colored partition (distinct values, same-color gap >= 2) to an
// overpartition: within every maximal run all parts except the smallest are
// overlined, and the smallest is overlined iff its color is Black.
// Throws PreconditionError when the input fails is_valid_2crr.
Overpartition colored_to_over(const ColoredPartition& p);

// Inverse map.  The smallest part of each run takes color Black iff it is
// overlined; colors then alternate upward along the run.  Throws
// PreconditionError when the input fails is_valid_D(p, 2, 2).
ColoredPartition over_to_colored(const Overpartition& p);

} // namespace qpart
