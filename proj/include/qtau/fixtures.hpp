#pragma once

// The worked example algebras, embedded so the verification suites run
// without touching the filesystem. The same texts ship as fixtures/*.qa.

#include "qtau/algebra_io.hpp"

namespace qtau::fixtures {

inline constexpr const char* B1A = R"(# Two-vertex cyclic quiver; the composite 1 -> 2 -> 1 vanishes.
algebra b1a
vertices: 1 2
arrows: b: 1 -> 2, a: 2 -> 1
relations: b*a = 0
)";

inline constexpr const char* B1B = R"(# Two-vertex cyclic quiver; the composite 2 -> 1 -> 2 vanishes.
algebra b1b
vertices: 1 2
arrows: b: 1 -> 2, a: 2 -> 1
relations: a*b = 0
)";

inline constexpr const char* A1A = R"(# b1a extended at vertex 2 by the new source vertex 3.
algebra a1a
vertices: 1 2 3
arrows: b: 1 -> 2, a: 2 -> 1, g: 3 -> 2
relations: b*a = 0
)";

inline constexpr const char* A1B = R"(# b1b extended at vertex 2 by the new source vertex 3.
algebra a1b
vertices: 1 2 3
arrows: b: 1 -> 2, a: 2 -> 1, g: 3 -> 2
relations: a*b = 0
)";

inline constexpr const char* B2 = R"(algebra b2
vertices: 1 2 3 4
arrows: b: 3 -> 1, c: 3 -> 2, a: 4 -> 3
relations: a*b = 0
)";

inline constexpr const char* A2 = R"(# b2 extended at vertex 3 by the new source vertex 5.
algebra a2
vertices: 1 2 3 4 5
arrows: b: 3 -> 1, c: 3 -> 2, a: 4 -> 3, d: 5 -> 3
relations: a*b = 0
)";

inline constexpr const char* A3 = R"(# Extension of b2 across vertex 3 by a non-projective module; the extra
# relation d*b = 0 has to be supplied by hand.
algebra a3
vertices: 1 2 3 4 5
arrows: b: 3 -> 1, c: 3 -> 2, a: 4 -> 3, d: 5 -> 3
relations: a*b = 0, d*b = 0
)";

inline constexpr const char* POINT = R"(algebra point
vertices: 1
arrows:
relations:
)";

inline AlgebraPtr load(const char* text) { return parse_algebra(text); }

}  // namespace qtau::fixtures
