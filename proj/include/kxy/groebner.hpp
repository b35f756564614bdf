#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kxy/budget.hpp"
#include "kxy/endo.hpp"
#include "kxy/poly.hpp"

namespace kxy {

// Total multiplication-compatible well-orders on monomials. block_elimination
// compares the first `block` ring variables grlex-first, so any monomial
// touching the eliminated block beats every monomial free of it.
struct MonomialOrder {
    enum class Kind { lex, grlex, block_elimination };

    Kind kind = Kind::grlex;
    int block = 0;  // size of the eliminated leading block

    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder grlex() { return {Kind::grlex, 0}; }
    static MonomialOrder eliminate_first(int block) { return {Kind::block_elimination, block}; }

    bool less(const Mono& a, const Mono& b) const;
};

enum class PairStrategy { normal, first };

// Reduced Groebner basis plus cofactor rows: basis[i] = sum_j cofactors[i][j] * gens[j].
struct GroebnerBasis {
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cofactors;
};

GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order,
                         const Budget& budget = {}, PairStrategy strategy = PairStrategy::normal);

// Cofactors c_i with sum c_i * gens_i = f, verified by expansion; nullopt
// when f is not in the ideal.
std::optional<std::vector<Poly>> ideal_member(const Poly& f, std::span<const Poly> gens,
                                              const Budget& budget = {});

// u, v with p_x u + p_y v = 1, verified by expansion.
struct UnimodCert {
    Poly u, v;
};

std::optional<UnimodCert> unimodular_cert(const Poly& p, const Budget& budget = {});

// Expression e over the tag ring {P,Q} with e(p,q) = f, verified by
// substitution.
struct MembershipCert {
    Poly expression;
};

std::optional<MembershipCert> subalg_member(const Poly& f, const Poly& p, const Poly& q,
                                            const Budget& budget = {});

// True iff x and y both lie in K[phi(x), phi(y)]; the inverse is assembled
// from the membership expressions and verified by composition to identity.
struct AutoCheck {
    bool is_auto = false;
    std::optional<Endo> inverse;
};

AutoCheck is_automorphism(const Endo& phi, const Budget& budget = {});

}  // namespace kxy
