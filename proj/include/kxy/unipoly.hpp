#pragma once

#include <vector>

#include "kxy/poly.hpp"
#include "kxy/rational.hpp"

namespace kxy {

// Dense one-variable polynomial over Q; coeff[i] multiplies t^i.
// Leading zero coefficients are stripped.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);

    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(const Rat& c);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const;  // kNegInfDegree for zero
    Rat coeff(int i) const;
    void set_coeff(int i, const Rat& v);

    Rat eval(const Rat& t) const;
    Poly eval(const Poly& t) const;  // Horner, exact

    UniPoly operator+(const UniPoly& g) const;
    UniPoly operator-(const UniPoly& g) const;
    UniPoly operator*(const UniPoly& g) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator-() const;

    bool operator==(const UniPoly&) const = default;

private:
    void strip();
    std::vector<Rat> c_;
};

// Monic gcd over Q; gcd(0,0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

}  // namespace kxy
