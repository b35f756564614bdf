#include "kxy/jacobian.hpp"

namespace kxy {

JacMatrix jac_matrix(const Endo& phi) {
    return JacMatrix{{partial(phi.img_x, Var::x), partial(phi.img_x, Var::y),
                      partial(phi.img_y, Var::x), partial(phi.img_y, Var::y)}};
}

Poly jac_det(const Endo& phi) {
    JacMatrix j = jac_matrix(phi);
    return j.entries[0] * j.entries[3] - j.entries[1] * j.entries[2];
}

bool is_keller(const Endo& phi) {
    Poly d = jac_det(phi);
    return !d.is_zero() && d.is_constant();
}

bool alg_dependent(const Poly& p, const Poly& q) {
    return jac_det(Endo{p, q}).is_zero();
}

}  // namespace kxy
