#include "kxy/unipoly.hpp"

namespace kxy {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly({c}); }

void UniPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UniPoly::degree() const {
    return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1;
}

Rat UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

void UniPoly::set_coeff(int i, const Rat& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(i) + 1);
    c_[static_cast<std::size_t>(i)] = v;
    strip();
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly UniPoly::eval(const Poly& t) const {
    Poly acc(t.ring());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + Poly::constant(t.ring(), *it);
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& g) const {
    std::vector<Rat> r(std::max(c_.size(), g.c_.size()), Rat(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = coeff(static_cast<int>(i)) + g.coeff(static_cast<int>(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& g) const { return *this + (-g); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& g) const {
    if (is_zero() || g.is_zero()) return UniPoly{};
    std::vector<Rat> r(c_.size() + g.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] += c_[i] * g.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // a mod b
        UniPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rat q = r.coeff(r.degree()) / b.coeff(b.degree());
            std::vector<Rat> t(static_cast<std::size_t>(shift) + 1, Rat(0));
            t.back() = q;
            r = r - b * UniPoly(std::move(t));
        }
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.coeff(a.degree()));
    return a;
}

}  // namespace kxy
