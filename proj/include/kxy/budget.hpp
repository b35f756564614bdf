#pragma once

namespace kxy {

// Resource caps shared by all potentially explosive computations.
// Hitting a cap raises BudgetError, never a wrong verdict.
struct Budget {
    int degree_cap = 512;            // total degree of any intermediate Poly
    int basis_cap = 2000;            // Groebner basis size
    long reduction_steps = 1000000;  // single-term reduction steps per call
};

}  // namespace kxy
