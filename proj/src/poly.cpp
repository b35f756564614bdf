#include "kxy/poly.hpp"

#include <algorithm>

#include "kxy/unipoly.hpp"

namespace kxy {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::P: return "P";
        case Var::Q: return "Q";
    }
    return "?";
}

Ring::Ring(std::initializer_list<Var> vars) {
    for (Var v : vars) {
        if (n_ > 0 && vars_[n_ - 1u] >= v)
            throw RingError("ring variables must follow the fixed order x > y > P > Q");
        vars_[n_++] = v;
    }
}

const Ring& Ring::xy() {
    static const Ring r{Var::x, Var::y};
    return r;
}

const Ring& Ring::xyPQ() {
    static const Ring r{Var::x, Var::y, Var::P, Var::Q};
    return r;
}

const Ring& Ring::PQ() {
    static const Ring r{Var::P, Var::Q};
    return r;
}

std::optional<int> Ring::index_of(Var v) const {
    for (int i = 0; i < n_; ++i)
        if (vars_[static_cast<std::size_t>(i)] == v) return i;
    return std::nullopt;
}

std::optional<int> Ring::index_of(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
        if (name == var_name(vars_[static_cast<std::size_t>(i)])) return i;
    return std::nullopt;
}

bool Mono::divides(const Mono& m) const {
    for (int i = 0; i < 4; ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Mono Mono::operator*(const Mono& m) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + m.e[i]);
    return r;
}

Mono Mono::operator/(const Mono& m) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - m.e[i]);
    return r;
}

Mono Mono::pow(int k) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] * k);
    return r;
}

bool grlex_less(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (int i = 0; i < 4; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

Poly Poly::constant(const Ring& ring, const Rat& c) {
    Poly f(ring);
    if (c != 0) f.terms_.emplace(Mono{}, c);
    return f;
}

Poly Poly::variable(const Ring& ring, Var v) {
    auto idx = ring.index_of(v);
    if (!idx) throw RingError(std::string("variable ") + var_name(v) + " not in ring");
    Mono m;
    m.e[static_cast<std::size_t>(*idx)] = 1;
    Poly f(ring);
    f.terms_.emplace(m, Rat(1));
    return f;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Poly::degree() const {
    if (terms_.empty()) return kNegInfDegree;
    return terms_.begin()->first.deg();
}

Rat Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_same_ring(const Poly& g) const {
    if (!(ring_ == g.ring_)) throw RingError("operands live in different rings");
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& g) const {
    check_same_ring(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& g) const {
    check_same_ring(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& g) const {
    check_same_ring(g);
    Poly r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly pow(const Poly& f, int k) {
    Poly r = Poly::constant(f.ring(), Rat(1));
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}

Poly substitute(const Poly& f, std::span<const Poly> images, int degree_cap) {
    const int n = f.ring().size();
    if (static_cast<int>(images.size()) != n)
        throw PrecondError("substitute: one image per ring variable required");
    const Ring& target = images.empty() ? Ring::xy() : images[0].ring();
    for (const Poly& img : images)
        if (!(img.ring() == target)) throw RingError("substitute: images over mixed rings");

    auto guard = [degree_cap](const Poly& g) -> const Poly& {
        if (degree_cap >= 0 && g.degree() != kNegInfDegree && g.degree() > degree_cap)
            throw BudgetError("degree cap " + std::to_string(degree_cap) +
                              " exceeded during substitution");
        return g;
    };

    // Power cache per variable.
    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
    auto power_of = [&](int var, int k) -> const Poly& {
        auto& cache = powers[static_cast<std::size_t>(var)];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rat(1)));
        while (static_cast<int>(cache.size()) <= k) {
            cache.push_back(cache.back() * images[static_cast<std::size_t>(var)]);
            guard(cache.back());
        }
        return cache[static_cast<std::size_t>(k)];
    };

    Poly result(target);
    for (const auto& [m, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (int i = 0; i < n; ++i) {
            int k = m.e[static_cast<std::size_t>(i)];
            if (k > 0) term = guard(term * power_of(i, k));
        }
        result = result + term;
    }
    return result;
}

Poly partial(const Poly& f, Var v) {
    auto idx = f.ring().index_of(v);
    if (!idx) throw RingError(std::string("partial: variable ") + var_name(v) + " not in ring");
    std::size_t i = static_cast<std::size_t>(*idx);
    Poly r(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m.e[i] == 0) continue;
        Mono d = m;
        d.e[i] = static_cast<std::uint16_t>(d.e[i] - 1);
        r.add_term(d, c * Rat(m.e[i]));
    }
    return r;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& d) {
    if (d.is_zero()) return std::nullopt;
    Poly rem = f;
    Poly quot(f.ring());
    while (!rem.is_zero()) {
        const Mono& lm = rem.leading_mono();
        if (!d.leading_mono().divides(lm)) return std::nullopt;
        Mono t = lm / d.leading_mono();
        Rat c = rem.leading_coeff() / d.leading_coeff();
        Poly piece(f.ring());
        piece.add_term(t, c);
        quot = quot + piece;
        rem = rem - piece * d;
    }
    return quot;
}

std::map<int, Poly> homog_components(const Poly& f) {
    std::map<int, Poly> comps;
    for (const auto& [m, c] : f.terms()) {
        auto [it, _] = comps.try_emplace(m.deg(), f.ring());
        it->second.add_term(m, c);
    }
    return comps;
}

namespace {

// A homogeneous bivariate polynomial factors as x^a y^b * core where the
// core has nonzero ends; the core dehomogenizes to a univariate polynomial
// in t with coefficient of t^i taken from the x^i term.
struct HomogParts {
    int xpow = 0;
    int ypow = 0;
    UniPoly core;
};

HomogParts split_homogeneous(const Poly& h) {
    HomogParts parts;
    int min_x = 1 << 20, min_y = 1 << 20;
    for (const auto& [m, c] : h.terms()) {
        min_x = std::min<int>(min_x, m.e[0]);
        min_y = std::min<int>(min_y, m.e[1]);
    }
    parts.xpow = min_x;
    parts.ypow = min_y;
    std::vector<Rat> coeffs;
    for (const auto& [m, c] : h.terms()) {
        int i = m.e[0] - min_x;
        if (static_cast<int>(coeffs.size()) <= i) coeffs.resize(static_cast<std::size_t>(i) + 1);
        coeffs[static_cast<std::size_t>(i)] = c;
    }
    parts.core = UniPoly(std::move(coeffs));
    return parts;
}

// Rebuild a homogeneous polynomial of degree `total` from a univariate core.
Poly rehomogenize(const UniPoly& u, int total, const Ring& ring) {
    Poly r(ring);
    for (int i = 0; i <= u.degree(); ++i) {
        if (u.coeff(i) == 0) continue;
        Mono m;
        m.e[0] = static_cast<std::uint16_t>(i);
        m.e[1] = static_cast<std::uint16_t>(total - i);
        r.add_term(m, u.coeff(i));
    }
    return r;
}

}  // namespace

Poly homog_gcd(const Poly& g) {
    if (g.is_zero()) throw PrecondError("homog_gcd: zero polynomial");
    if (!(g.ring() == Ring::xy())) throw RingError("homog_gcd: expected a polynomial over {x,y}");

    int min_x = 1 << 20, min_y = 1 << 20;
    UniPoly core_gcd;
    for (const auto& [deg, comp] : homog_components(g)) {
        HomogParts parts = split_homogeneous(comp);
        min_x = std::min(min_x, parts.xpow);
        min_y = std::min(min_y, parts.ypow);
        core_gcd = uni_gcd(core_gcd, parts.core);
    }
    Poly d = rehomogenize(core_gcd, core_gcd.degree(), g.ring());
    Mono shift;
    shift.e[0] = static_cast<std::uint16_t>(min_x);
    shift.e[1] = static_cast<std::uint16_t>(min_y);
    Poly mono(g.ring());
    mono.add_term(shift, Rat(1));
    d = d * mono;
    return d * (Rat(1) / d.leading_coeff());
}

Poly change_ring(const Poly& f, const Ring& target) {
    Poly r(target);
    for (const auto& [m, c] : f.terms()) {
        Mono t;
        for (int i = 0; i < f.ring().size(); ++i) {
            if (m.e[static_cast<std::size_t>(i)] == 0) continue;
            auto idx = target.index_of(f.ring().var(i));
            if (!idx)
                throw RingError(std::string("change_ring: variable ") +
                                var_name(f.ring().var(i)) + " absent from target ring");
            t.e[static_cast<std::size_t>(*idx)] = m.e[static_cast<std::size_t>(i)];
        }
        r.add_term(t, c);
    }
    return r;
}

}  // namespace kxy
