#pragma once

#include <string>

#include "swh/hull2.hpp"

namespace swh {

// JSON exchange format for one lifted point:
//   {"x": [x1, x2], "X": [X11, X12, X22], "y": [y1, y2], "Y12": v,
//    "alpha": [a1, a2], "beta": [b1, b2]}
// alpha and beta are optional; every other key is required; unknown keys,
// wrong shapes, and non-finite numbers raise ParseError.
struct ParsedPoint {
  LiftedPoint z;
  bool has_alpha = false;  // z.has_beta tracks beta the same way
};

ParsedPoint parse_point(const std::string& text);
ParsedPoint load_point(const std::string& path);

// Round-trip-exact serialization (17 significant digits). alpha is written
// when requested, beta when the point carries one.
std::string format_point(const LiftedPoint& z, bool with_alpha);

}  // namespace swh
