#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kxy/budget.hpp"
#include "kxy/poly.hpp"
#include "kxy/unipoly.hpp"

namespace kxy {

// Polynomial mapping of K[x,y] given by the images of x and y.
struct Endo {
    Poly img_x = Poly::variable(Ring::xy(), Var::x);
    Poly img_y = Poly::variable(Ring::xy(), Var::y);

    static Endo identity() { return Endo{}; }
    bool is_identity() const { return *this == identity(); }
    bool operator==(const Endo&) const = default;
};

// phi(f), fully expanded. Throws BudgetError past the degree cap.
Poly apply(const Endo& phi, const Poly& f, const Budget& budget = {});

// compose(phi, psi) acts as "apply psi, then phi" on ring elements:
// compose(phi, psi)(f) = phi(psi(f)). The left-to-right product "psi phi"
// (psi after phi) is therefore compose(psi, phi).
Endo compose(const Endo& phi, const Endo& psi, const Budget& budget = {});

// k-fold self-composition, k >= 1.
Endo iterate(const Endo& phi, int k, const Budget& budget = {});

// One generator step of a tame automorphism.
struct TameStep {
    enum class Kind { elementary_x, elementary_y, linear };

    Kind kind = Kind::linear;
    UniPoly payload;  // elementary_x: x -> x + payload(y); elementary_y symmetric
    // linear: (x,y) -> (m00 x + m01 y + t0, m10 x + m11 y + t1), det != 0
    std::array<Rat, 4> m{Rat(1), Rat(0), Rat(0), Rat(1)};
    std::array<Rat, 2> t{Rat(0), Rat(0)};

    static TameStep elementary_x(UniPoly a);
    static TameStep elementary_y(UniPoly a);
    static TameStep linear(std::array<Rat, 4> m, std::array<Rat, 2> t = {Rat(0), Rat(0)});
    static TameStep swap_xy();
    static TameStep translation(const Rat& tx, const Rat& ty);

    bool operator==(const TameStep&) const = default;
};

Endo to_endo(const TameStep& step);
TameStep invert(const TameStep& step);

// A word of tame steps. The induced endomorphism is the composition
// step[0] ∘ step[1] ∘ ... ∘ step[n-1] (first step outermost), so
// to_endo(word)(f) = step[0](step[1](... step[n-1](f))).
struct TameWord {
    std::vector<TameStep> steps;
    bool operator==(const TameWord&) const = default;
};

Endo to_endo(const TameWord& word, const Budget& budget = {});
TameWord invert(const TameWord& word);

// Deterministic function of the seed; linear steps have determinant +-1.
TameWord random_tame(std::uint64_t seed, int word_len, int coeff_bound, int deg_bound);

// Text format "x -> <expr>; y -> <expr>".
Endo parse_endo(std::string_view src);
std::string print_endo(const Endo& phi);

}  // namespace kxy
