#pragma once

#include <vector>

#include "bregman/generator.hpp"

namespace bregman {

// Element of M = J^K, componentwise in the generator's domain.
using Point = std::vector<double>;

// Validates K >= 1 and interior membership of every coordinate.
void require_point_in_domain(const Generator& gen, const Point& x, const char* field = "point");

// Validates matching nonzero dimensions.
void require_same_dimension(const Point& x, const Point& y);

} // namespace bregman
