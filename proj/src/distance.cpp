#include "cleangraph/distance.hpp"

namespace cleangraph {

std::string to_string(const distance& d) {
    return d.is_infinite() ? "INF" : to_string(d.value());
}

distance distance_from_string(std::string_view s) {
    if (s == "INF") return distance::infinite();
    return distance::finite(wide_from_string(s));
}

}  // namespace cleangraph
