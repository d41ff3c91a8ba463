#pragma once

#include <vector>

#include "orbitkit/lie.hpp"

namespace orbitkit {

struct WeightSpace {
    Vector weight;  // eigenvalue of ad(elements[k]) in slot k
    Subspace space;
};

// Simultaneous eigenspace decomposition of an ad-invariant subspace under a
// family of commuting elements acting semisimply with rational eigenvalues.
// Throws InternalError if the action is not diagonalisable over Q.
// Result is sorted by weight, lexicographically descending.
std::vector<WeightSpace> joint_eigenspaces(const LieAlgebra& alg, const std::vector<Vector>& elements,
                                           const Subspace& start);

}  // namespace orbitkit
