#include "kxy/endo.hpp"

#include <sstream>

#include "kxy/parse.hpp"

namespace kxy {

namespace {

void check_degree(const Poly& f, const Budget& budget) {
    if (f.degree() != kNegInfDegree && f.degree() > budget.degree_cap)
        throw BudgetError("degree cap " + std::to_string(budget.degree_cap) +
                          " exceeded (degree " + std::to_string(f.degree()) + ")");
}

}  // namespace

Poly apply(const Endo& phi, const Poly& f, const Budget& budget) {
    if (!(f.ring() == Ring::xy())) throw RingError("apply: expected a polynomial over {x,y}");
    std::array<Poly, 2> images{phi.img_x, phi.img_y};
    Poly r = substitute(f, images, budget.degree_cap);
    check_degree(r, budget);
    return r;
}

Endo compose(const Endo& phi, const Endo& psi, const Budget& budget) {
    return Endo{apply(phi, psi.img_x, budget), apply(phi, psi.img_y, budget)};
}

Endo iterate(const Endo& phi, int k, const Budget& budget) {
    if (k < 1) throw PrecondError("iterate: k must be >= 1");
    Endo r = phi;
    for (int i = 1; i < k; ++i) r = compose(phi, r, budget);
    return r;
}

TameStep TameStep::elementary_x(UniPoly a) {
    TameStep s;
    s.kind = Kind::elementary_x;
    s.payload = std::move(a);
    return s;
}

TameStep TameStep::elementary_y(UniPoly a) {
    TameStep s;
    s.kind = Kind::elementary_y;
    s.payload = std::move(a);
    return s;
}

TameStep TameStep::linear(std::array<Rat, 4> m, std::array<Rat, 2> t) {
    if (m[0] * m[3] - m[1] * m[2] == 0)
        throw PrecondError("linear step: matrix must be invertible");
    TameStep s;
    s.kind = Kind::linear;
    s.m = std::move(m);
    s.t = std::move(t);
    return s;
}

TameStep TameStep::swap_xy() {
    return linear({Rat(0), Rat(1), Rat(1), Rat(0)});
}

TameStep TameStep::translation(const Rat& tx, const Rat& ty) {
    return linear({Rat(1), Rat(0), Rat(0), Rat(1)}, {tx, ty});
}

Endo to_endo(const TameStep& step) {
    const Ring& ring = Ring::xy();
    Poly x = Poly::variable(ring, Var::x);
    Poly y = Poly::variable(ring, Var::y);
    switch (step.kind) {
        case TameStep::Kind::elementary_x:
            return Endo{x + step.payload.eval(y), y};
        case TameStep::Kind::elementary_y:
            return Endo{x, y + step.payload.eval(x)};
        case TameStep::Kind::linear:
            return Endo{x * step.m[0] + y * step.m[1] + Poly::constant(ring, step.t[0]),
                        x * step.m[2] + y * step.m[3] + Poly::constant(ring, step.t[1])};
    }
    throw Error("unreachable");
}

TameStep invert(const TameStep& step) {
    switch (step.kind) {
        case TameStep::Kind::elementary_x:
            return TameStep::elementary_x(-step.payload);
        case TameStep::Kind::elementary_y:
            return TameStep::elementary_y(-step.payload);
        case TameStep::Kind::linear: {
            Rat det = step.m[0] * step.m[3] - step.m[1] * step.m[2];
            std::array<Rat, 4> inv{step.m[3] / det, -step.m[1] / det,
                                   -step.m[2] / det, step.m[0] / det};
            std::array<Rat, 2> t{-(inv[0] * step.t[0] + inv[1] * step.t[1]),
                                 -(inv[2] * step.t[0] + inv[3] * step.t[1])};
            return TameStep::linear(std::move(inv), std::move(t));
        }
    }
    throw Error("unreachable");
}

Endo to_endo(const TameWord& word, const Budget& budget) {
    Endo r = Endo::identity();
    for (const TameStep& s : word.steps) r = compose(r, to_endo(s), budget);
    return r;
}

TameWord invert(const TameWord& word) {
    TameWord inv;
    inv.steps.reserve(word.steps.size());
    for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it)
        inv.steps.push_back(invert(*it));
    return inv;
}

namespace {

// splitmix64: platform-independent, so seeded outputs are reproducible
// byte-for-byte everywhere.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

    Rat coefficient(int bound) { return Rat(below(2L * bound + 1) - bound); }
};

}  // namespace

TameWord random_tame(std::uint64_t seed, int word_len, int coeff_bound, int deg_bound) {
    if (word_len < 0 || coeff_bound < 1 || deg_bound < 1)
        throw PrecondError("random_tame: bounds must be positive");
    SplitMix64 rng{seed};
    TameWord word;
    for (int i = 0; i < word_len; ++i) {
        switch (rng.below(3)) {
            case 0:
            case 1: {
                int deg = static_cast<int>(rng.below(deg_bound + 1));
                std::vector<Rat> coeffs(static_cast<std::size_t>(deg) + 1);
                for (auto& c : coeffs) c = rng.coefficient(coeff_bound);
                UniPoly a(std::move(coeffs));
                word.steps.push_back(rng.below(2) == 0 ? TameStep::elementary_x(a)
                                                       : TameStep::elementary_y(a));
                break;
            }
            default: {
                // Unitriangular product keeps the determinant at +-1.
                Rat a = rng.coefficient(coeff_bound);
                Rat b = rng.coefficient(coeff_bound);
                std::array<Rat, 4> m{Rat(1) + a * b, a, b, Rat(1)};
                if (rng.below(2) == 1) {
                    std::swap(m[0], m[1]);
                    std::swap(m[2], m[3]);  // det flips to -1
                }
                std::array<Rat, 2> t{rng.coefficient(coeff_bound), rng.coefficient(coeff_bound)};
                word.steps.push_back(TameStep::linear(std::move(m), std::move(t)));
                break;
            }
        }
    }
    return word;
}

Endo parse_endo(std::string_view src) {
    auto semi = src.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("expected \"x -> <expr>; y -> <expr>\"", src.size());
    auto side = [&](std::string_view part, std::string_view var, std::size_t base) {
        std::size_t i = 0;
        while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
        if (i >= part.size() || part.substr(i, var.size()) != var)
            throw ParseError("expected \"" + std::string(var) + " ->\"", base + i);
        i += var.size();
        while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
        if (part.substr(i, 2) != "->") throw ParseError("expected \"->\"", base + i);
        i += 2;
        try {
            return parse_poly(part.substr(i), Ring::xy());
        } catch (const ParseError& e) {
            throw ParseError("in image expression: " + std::string(e.what()), base + i + e.pos());
        }
    };
    Poly ix = side(src.substr(0, semi), "x", 0);
    Poly iy = side(src.substr(semi + 1), "y", semi + 1);
    return Endo{std::move(ix), std::move(iy)};
}

std::string print_endo(const Endo& phi) {
    return "x -> " + print_poly(phi.img_x) + "; y -> " + print_poly(phi.img_y);
}

}  // namespace kxy
