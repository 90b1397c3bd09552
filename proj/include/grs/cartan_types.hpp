#pragma once

#include <cstddef>
#include <string>

#include "grs/linalg.hpp"

namespace grs {

// Standard Cartan matrices of the simply-laced Dynkin types. Family is 'A'
// (rank ≥ 1), 'D' (rank ≥ 4) or 'E' (rank 6, 7, 8). Node numbering: A is the
// path 0–1–…; D is the path 0–…–(n−2) with n−1 attached to n−3; E is the path
// 0–2–3–…–(n−1) with 1 attached to 3.
IntMatrix standard_cartan(char family, std::size_t rank);

// Number of roots of the irreducible classical system of that type.
std::size_t classical_root_count(char family, std::size_t rank);

std::string type_name(char family, std::size_t rank);

}  // namespace grs
