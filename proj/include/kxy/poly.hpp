#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kxy/errors.hpp"
#include "kxy/rational.hpp"

namespace kxy {

// Degree of the zero polynomial: ordered below every genuine degree so
// degree comparisons stay total inside reduction loops.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Ambient variables in their fixed global order x > y > P > Q.
// P and Q are tag variables used only by the subalgebra-membership
// construction.
enum class Var : std::uint8_t { x = 0, y = 1, P = 2, Q = 3 };

const char* var_name(Var v);

// A ring is an ordered subset of {x, y, P, Q}.
class Ring {
public:
    Ring() = default;
    Ring(std::initializer_list<Var> vars);

    static const Ring& xy();    // K[x,y], the working ring
    static const Ring& xyPQ();  // K[x,y,P,Q], tag-variable ring
    static const Ring& PQ();    // K[P,Q], certificate expressions

    int size() const { return n_; }
    Var var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    std::optional<int> index_of(Var v) const;
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const Ring&) const = default;

private:
    std::uint8_t n_ = 0;
    std::array<Var, 4> vars_{};
};

// Exponent vector; entries beyond the ring's variable count stay zero, so
// comparisons need not know the ring.
struct Mono {
    std::array<std::uint16_t, 4> e{};

    int deg() const { return e[0] + e[1] + e[2] + e[3]; }
    bool is_constant() const { return deg() == 0; }
    bool divides(const Mono& m) const;
    Mono operator*(const Mono& m) const;
    Mono operator/(const Mono& m) const;  // caller ensures divisibility
    Mono pow(int k) const;

    bool operator==(const Mono&) const = default;
};

// Graded lexicographic order, x > y > P > Q.
bool grlex_less(const Mono& a, const Mono& b);

struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_less(b, a); }
};

// Sparse exact-rational multivariate polynomial in canonical form: no zero
// coefficients, terms iterated in descending graded-lex order.
class Poly {
public:
    using TermMap = std::map<Mono, Rat, GrlexGreater>;

    Poly() : ring_(Ring::xy()) {}
    explicit Poly(const Ring& ring) : ring_(ring) {}

    static Poly constant(const Ring& ring, const Rat& c);
    static Poly variable(const Ring& ring, Var v);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Total degree; kNegInfDegree for the zero polynomial.
    int degree() const;

    Rat coeff(const Mono& m) const;
    Rat constant_term() const { return coeff(Mono{}); }
    // Leading term under grlex; precondition: nonzero.
    const Mono& leading_mono() const;
    const Rat& leading_coeff() const;

    // Accumulate c * m, dropping the term if it cancels to zero.
    void add_term(const Mono& m, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly operator*(const Rat& c) const;

    bool operator==(const Poly&) const = default;

private:
    void check_same_ring(const Poly& g) const;

    Ring ring_;
    TermMap terms_;
};

Poly pow(const Poly& f, int k);

// Replace each ring variable of f by the corresponding image; all images
// share one (possibly different) ring, which becomes the result's ring.
// A non-negative degree_cap bounds every intermediate polynomial and
// throws BudgetError when exceeded; -1 disables the guard.
Poly substitute(const Poly& f, std::span<const Poly> images, int degree_cap = -1);

// Formal partial derivative.
Poly partial(const Poly& f, Var v);

// Exact division; nullopt when d does not divide f.
std::optional<Poly> exact_divide(const Poly& f, const Poly& d);

// Homogeneous components keyed by degree.
std::map<int, Poly> homog_components(const Poly& f);

// Greatest homogeneous polynomial (monic under grlex) dividing every
// homogeneous component of g, hence dividing g; g has a non-constant
// homogeneous divisor iff the result is non-constant. Bivariate only.
Poly homog_gcd(const Poly& g);

// Map f into `target` by variable name; every variable actually occurring
// in f must exist in target.
Poly change_ring(const Poly& f, const Ring& target);

}  // namespace kxy
