#include "cleangraph/wide.hpp"

#include <limits>
#include <stdexcept>

namespace cleangraph {

std::string to_string(wide v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

wide wide_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("wide_from_string: empty input");
    constexpr wide max = ~wide{0};
    wide v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("wide_from_string: non-digit in \"" + std::string(s) + "\"");
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (max - d) / 10) throw std::overflow_error("wide_from_string: value exceeds 128 bits");
        v = v * 10 + d;
    }
    return v;
}

wide checked_add(wide a, wide b) {
    if (a > ~wide{0} - b) throw std::overflow_error("wide addition exceeds 128 bits");
    return a + b;
}

wide checked_sub(wide a, wide b) {
    if (a < b) throw std::underflow_error("wide subtraction below zero");
    return a - b;
}

wide checked_mul(wide a, wide b) {
    if (a != 0 && b > ~wide{0} / a) throw std::overflow_error("wide multiplication exceeds 128 bits");
    return a * b;
}

}  // namespace cleangraph
