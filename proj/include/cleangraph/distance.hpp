#pragma once

#include <stdexcept>
#include <string>

#include "cleangraph/wide.hpp"

namespace cleangraph {

// Graph distance or distance sum: a finite exact value or infinity
// (disconnected pair / disconnected graph). Infinity is a real state of the
// type, never a numeric sentinel.
class distance {
  public:
    constexpr distance() = default;

    static constexpr distance finite(wide v) { return distance(false, v); }
    static constexpr distance infinite() { return distance(true, 0); }

    constexpr bool is_infinite() const { return infinite_; }

    constexpr wide value() const {
        if (infinite_) throw std::logic_error("distance: value() on infinite");
        return value_;
    }

    friend constexpr bool operator==(const distance& a, const distance& b) {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

  private:
    constexpr distance(bool inf, wide v) : infinite_(inf), value_(v) {}

    bool infinite_ = false;
    wide value_ = 0;
};

// "INF" or the decimal value; inverse of distance_from_string.
std::string to_string(const distance& d);
distance distance_from_string(std::string_view s);

}  // namespace cleangraph
