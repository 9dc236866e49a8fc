#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cleangraph {

// Exact accumulator for Wiener sums and closed-form evaluation. Vertex counts
// are capped, but closed forms run on any factorable n, where phi(n)^2 times a
// coefficient of order 2^(2k) leaves 64 bits long before the graph itself
// could be built.
using wide = unsigned __int128;

std::string to_string(wide v);

// Parses a non-negative decimal integer; throws std::invalid_argument on junk
// and std::overflow_error past 128 bits.
wide wide_from_string(std::string_view s);

// Closed forms on adversarial inputs (dozens of prime factors near the n
// bound) can exceed 128 bits; fail loudly instead of wrapping.
wide checked_add(wide a, wide b);
wide checked_sub(wide a, wide b);  // throws std::underflow_error if a < b
wide checked_mul(wide a, wide b);

}  // namespace cleangraph
