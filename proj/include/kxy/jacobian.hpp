#pragma once

#include <array>

#include "kxy/endo.hpp"
#include "kxy/poly.hpp"

namespace kxy {

// Row i = partials of image i with respect to (x, y).
struct JacMatrix {
    std::array<Poly, 4> entries;  // row-major 2x2
};

JacMatrix jac_matrix(const Endo& phi);

// p_x q_y - p_y q_x for phi = (p, q).
Poly jac_det(const Endo& phi);

// True iff the Jacobian determinant is a nonzero constant, i.e. the
// Jacobian matrix is invertible over K[x,y].
bool is_keller(const Endo& phi);

// Characteristic-0 criterion for a pair: algebraically dependent iff the
// Jacobian determinant vanishes identically.
bool alg_dependent(const Poly& p, const Poly& q);

}  // namespace kxy
