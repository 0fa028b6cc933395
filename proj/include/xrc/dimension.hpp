#pragma once

#include <vector>

#include "xrc/cocycle.hpp"

namespace xrc {

enum class ConstraintSet {
    axioms_only,
    axioms_plus_vanishing_on_ordered,
    alternating_cocycles,
};

ConstraintSet parse_constraint_set(const std::string& s);
std::string constraint_set_name(ConstraintSet cs);

// Exact dimension of the solution space of the homogeneous system over Q.
// Table systems use unknowns on ordered 4-tuples of distinct labels with
// axioms i)-iii) as constraints (i/ii handled by a signed-orbit
// parametrization, iii by elimination rows); "vanishing on ordered" refers to
// the natural cyclic order of the labels 0..n-1. Cocycle systems use
// alternating 2-cochains with the coboundary rows. Requires 4 <= n <= 8.
int space_dimension(int n, ConstraintSet cs);

// Nullspace basis, expanded to full tables, for the two table constraint
// sets. Throws for alternating_cocycles (use cocycle_nullspace).
std::vector<CrossRatioTable> crossratio_nullspace(int n, ConstraintSet cs);
std::vector<AltCochain2> cocycle_nullspace(int n);

}  // namespace xrc
