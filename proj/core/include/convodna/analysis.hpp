#pragma once

#include <cstdint>

#include "convodna/convcode.hpp"

namespace convodna {

// True iff the state diagram has a zero-output-weight directed cycle other
// than the zero state's self-loop.
bool is_catastrophic(const CodeSpec& code);

// Minimum free distance: least accumulated output weight over walks that
// leave the zero state via a nonzero input and return to it.
// DomainError for catastrophic codes.
int free_distance(const CodeSpec& code);

// floor((d-1)/2): the largest e the code is expected to correct.
int max_correctable(const CodeSpec& code);

// Smallest walk length x such that every walk of length x whose first edge
// leaves the zero state has weight > 2e. Requires 1 <= e <= floor((d-1)/2)
// and a non-catastrophic code.
int tau(const CodeSpec& code, int e);

// Weight of the smallest-weight path from one state to another, edge cost =
// output weight. Zero for identical states.
std::uint64_t min_path_weight(const StateDiagram& sd, State from, State to);

}  // namespace convodna
