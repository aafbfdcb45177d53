#pragma once

// JSON form of ConvexSet:
//   {"type": "singleton",     "center": [..]}
//   {"type": "box",           "center": [..], "halfwidths": [..]}
//   {"type": "ellipsoid",     "center": [..], "shape": [[..], ..]}
//   {"type": "zonotope",      "center": [..], "generators": [[..], ..]}
//   {"type": "linear_image",  "matrix": [[..], ..], "offset": [..], "inner": {..}}
//   {"type": "minkowski_sum", "terms": [{..}, ..]}
// A bare array such as [1, 1] is read as a singleton.

#include <string>
#include <string_view>

#include "reachkit/convexset.hpp"

namespace reachkit {

// Throws ParseError on malformed input.
ConvexSet convex_set_from_json(std::string_view text);
std::string convex_set_to_json(const ConvexSet& set);

}  // namespace reachkit
