#include "kxy/retract.hpp"

#include <array>

#include "kxy/newton.hpp"
#include "kxy/parse.hpp"

namespace kxy {

std::optional<UniPoly> subduce(const Poly& f, const Poly& p) {
    if (p.is_constant()) throw PrecondError("subduce: p must be non-constant");
    const Mono& lp = p.leading_mono();
    UniPoly h;
    Poly rem = f;
    std::vector<Poly> powers{Poly::constant(p.ring(), Rat(1))};
    while (!rem.is_zero()) {
        if (rem.is_constant()) {
            h.set_coeff(0, h.coeff(0) + rem.constant_term());
            break;
        }
        const Mono& lm = rem.leading_mono();
        // lt(p^k) = lt(p)^k, so lm must be an exact power of lp.
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (lp.e[static_cast<std::size_t>(i)] == 0) continue;
            k = lm.e[static_cast<std::size_t>(i)] / lp.e[static_cast<std::size_t>(i)];
            break;
        }
        if (k < 1 || !(lp.pow(k) == lm)) return std::nullopt;
        Rat a = rem.leading_coeff();
        Rat lpk = p.leading_coeff();
        for (int i = 1; i < k; ++i) lpk *= p.leading_coeff();
        a /= lpk;
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * p);
        rem = rem - powers[static_cast<std::size_t>(k)] * a;
        h.set_coeff(k, h.coeff(k) + a);
    }
    if (!(h.eval(p) == f)) return std::nullopt;  // unreachable; keeps the contract honest
    return h;
}

AmResult am_reduce(const Poly& f, const Poly& g, const Budget& budget) {
    if (f.is_zero() && g.is_zero()) throw PrecondError("am_reduce: both inputs are zero");
    AmResult out;
    Poly a = f, b = g;  // a is the "first" slot throughout
    long rounds = 0;
    while (!a.is_zero() && !b.is_zero()) {
        if (++rounds > budget.reduction_steps) throw BudgetError("am_reduce: step budget exceeded");
        bool reduce_first = a.degree() >= b.degree();
        Poly& big = reduce_first ? a : b;
        Poly& small = reduce_first ? b : a;
        if (small.degree() == 0) {
            out.error = "degree divisibility failure: a nonzero constant appeared";
            return out;
        }
        if (big.degree() % small.degree() != 0) {
            out.error = "not an AM-reducible pair: deg " + std::to_string(small.degree()) +
                        " does not divide deg " + std::to_string(big.degree());
            return out;
        }
        int k = big.degree() / small.degree();
        if (!(small.leading_mono().pow(k) == big.leading_mono())) {
            out.error = "not an AM-reducible pair: no scalar cancels the leading terms";
            return out;
        }
        Rat lk = small.leading_coeff();
        for (int i = 1; i < k; ++i) lk *= small.leading_coeff();
        Rat c = big.leading_coeff() / lk;
        big = big - pow(small, k) * c;
        out.steps.push_back({reduce_first, c, k});
    }
    out.ok = true;
    out.h_is_first = !a.is_zero();
    out.h = out.h_is_first ? a : b;
    return out;
}

RetractionCheck verify_retraction(const Endo& phi, const Budget& budget) {
    RetractionCheck chk;
    if (!(apply(phi, phi.img_x, budget) == phi.img_x)) {
        chk.status = RetractionCheck::Status::not_idempotent;
        chk.detail = "phi(phi(x)) != phi(x)";
        return chk;
    }
    if (!(apply(phi, phi.img_y, budget) == phi.img_y)) {
        chk.status = RetractionCheck::Status::not_idempotent;
        chk.detail = "phi(phi(y)) != phi(y)";
        return chk;
    }
    if (phi.is_identity()) {
        chk.status = RetractionCheck::Status::identity_image;
        chk.detail = "image is all of K[x,y]; not a proper retract";
        return chk;
    }
    if (phi.img_x.is_constant() && phi.img_y.is_constant()) {
        chk.status = RetractionCheck::Status::constants_image;
        chk.detail = "image is K; not a proper retract";
        return chk;
    }

    // Mirror the zero-constant-term normalization before reducing.
    Poly f0 = phi.img_x - Poly::constant(Ring::xy(), phi.img_x.constant_term());
    Poly g0 = phi.img_y - Poly::constant(Ring::xy(), phi.img_y.constant_term());
    AmResult am = am_reduce(f0, g0, budget);
    if (!am.ok) {
        chk.status = RetractionCheck::Status::generator_not_found;
        chk.detail = am.error;
        return chk;
    }
    Poly p = am.h;
    if (!(apply(phi, p, budget) == p)) {
        chk.status = RetractionCheck::Status::generator_not_found;
        chk.detail = "candidate generator is not fixed by the retraction";
        return chk;
    }
    auto wx = subduce(phi.img_x, p);
    auto wy = subduce(phi.img_y, p);
    if (!wx || !wy) {
        chk.status = RetractionCheck::Status::generator_not_found;
        chk.detail = "images do not subduce against the candidate generator";
        return chk;
    }
    chk.status = RetractionCheck::Status::proper;
    chk.cert = RetractionCert{phi, std::move(p), std::move(*wx), std::move(*wy),
                              std::nullopt, std::nullopt};
    return chk;
}

NormalizeResult normalize_retract(const Endo& phi, const Budget& budget) {
    NormalizeResult out;
    RetractionCheck chk = verify_retraction(phi, budget);
    if (!chk.proper()) {
        out.error = chk.detail.empty() ? "not a proper retraction" : chk.detail;
        return out;
    }
    const Poly& p = chk.cert->generator;

    // Replay the reduction as coordinate changes: with current images
    // (f, g), composing on the right with x -> x - c*y^k turns f into
    // f - c*g^k while g is untouched.
    TameWord word;
    Rat e1 = phi.img_x.constant_term();
    Rat e2 = phi.img_y.constant_term();
    if (e1 != 0 || e2 != 0) word.steps.push_back(TameStep::translation(-e1, -e2));

    Poly f0 = phi.img_x - Poly::constant(Ring::xy(), e1);
    Poly g0 = phi.img_y - Poly::constant(Ring::xy(), e2);
    AmResult am = am_reduce(f0, g0, budget);
    if (!am.ok) {
        out.error = am.error;
        return out;
    }
    for (const AmStep& s : am.steps) {
        UniPoly a;
        a.set_coeff(s.k, -s.c);
        word.steps.push_back(s.reduce_first ? TameStep::elementary_x(a)
                                            : TameStep::elementary_y(a));
    }
    if (!am.h_is_first) word.steps.push_back(TameStep::swap_xy());

    // Validate the replay: phi composed with the word must send x to the
    // generator and y to 0.
    Endo replay = compose(phi, to_endo(word, budget), budget);
    if (!(replay.img_x == p && replay.img_y.is_zero())) {
        out.error = "replayed coordinate changes do not reach (generator, 0)";
        return out;
    }

    out.psi = invert(word);
    out.p_normal = apply(to_endo(out.psi, budget), p, budget);

    // The normal form must be literally x + y*q.
    Poly x = Poly::variable(Ring::xy(), Var::x);
    Poly y = Poly::variable(Ring::xy(), Var::y);
    Poly rest = out.p_normal - x;
    auto q = exact_divide(rest, y);
    if (!q) {
        out.error = "normal form is not of the shape x + y*q: " + print_poly(out.p_normal);
        return out;
    }
    out.q = std::move(*q);
    out.generator = p;
    out.ok = true;
    return out;
}

namespace {

// Certify rho as a retraction onto K[p] from scratch.
bool certify(const Endo& rho, const Poly& p, const Budget& budget, RetractionCert& cert,
             std::string& error) {
    if (!(apply(rho, rho.img_x, budget) == rho.img_x &&
          apply(rho, rho.img_y, budget) == rho.img_y)) {
        error = "not idempotent";
        return false;
    }
    if (!(apply(rho, p, budget) == p)) {
        error = "generator is not fixed";
        return false;
    }
    auto wx = subduce(rho.img_x, p);
    auto wy = subduce(rho.img_y, p);
    if (!wx || !wy) {
        error = "image is not contained in K[p]";
        return false;
    }
    cert = RetractionCert{rho, p, std::move(*wx), std::move(*wy), std::nullopt, std::nullopt};
    return true;
}

}  // namespace

Cor12Result cor12_retraction(const Poly& p, const Endo& phi, const Budget& budget) {
    Cor12Result out;
    if (!(apply(phi, p, budget) == Poly::variable(Ring::xy(), Var::x))) {
        out.error = "phi(p) != x";
        return out;
    }
    Endo psi{p, Poly(Ring::xy())};
    Endo rho = compose(psi, phi, budget);  // psi after phi
    RetractionCert cert;
    if (!certify(rho, p, budget, cert, out.error)) return out;
    out.ok = true;
    out.cert = std::move(cert);
    return out;
}

Cor31Result cor31_retraction(const Poly& p, const Budget& budget) {
    Poly x = Poly::variable(Ring::xy(), Var::x);
    Poly g = p - x;
    if (p.constant_term() != 0 || g.coeff(Mono{{1, 0, 0, 0}}) != 0 ||
        p.coeff(Mono{{1, 0, 0, 0}}) != 1)
        throw PrecondError("cor31_retraction: p must have the form x + g, "
                           "zero constant term, x-coefficient 1");
    Cor31Result out;
    if (g.is_zero()) {
        // p = x; the coordinate retraction works with c = 0.
        out.status = Cor31Result::Status::retract;
        out.divisor = Poly(Ring::xy());
        out.c = Rat(0);
        Endo rho{p, Poly(Ring::xy())};
        RetractionCert cert;
        std::string err;
        if (!certify(rho, p, budget, cert, err)) throw Error("cor31_retraction: " + err);
        out.cert = std::move(cert);
        return out;
    }

    Poly h = homog_gcd(g);
    out.divisor = h;
    if (h.is_constant()) {
        out.status = Cor31Result::Status::no_homogeneous_divisor;
        out.detail = "p - x has no non-constant homogeneous divisor";
        return out;
    }

    // y | h: the zero mapping on y already kills g.
    Mono pure_x;
    pure_x.e[0] = static_cast<std::uint16_t>(h.degree());
    bool y_divides = h.coeff(pure_x) == 0;
    Rat c(0);
    if (!y_divides) {
        // Seek c with h(1,c) = 0 by the rational root theorem on the
        // primitive integer form of h(1,t).
        UniPoly ht;
        for (const auto& [m, coeff] : h.terms()) ht.set_coeff(m.e[1], ht.coeff(m.e[1]) + coeff);
        Int den(1);
        for (const Rat& co : ht.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), co.get_den().get_mpz_t());
        std::vector<Int> zc;
        for (const Rat& co : ht.coeffs()) {
            Rat scaled = co * Rat(den);
            zc.push_back(scaled.get_num());
        }
        std::size_t low = 0;
        while (low < zc.size() && zc[low] == 0) ++low;  // t = 0 root means y | h
        Int a0 = abs(zc[low]);
        Int an = abs(zc.back());
        auto divisors = [](const Int& n) {
            std::vector<Int> ds;
            for (Int d(1); d * d <= n; ++d)
                if (n % d == 0) {
                    ds.push_back(d);
                    ds.push_back(n / d);
                }
            return ds;
        };
        bool found = false;
        for (const Int& num : divisors(a0)) {
            for (const Int& dd : divisors(an)) {
                for (int sign : {1, -1}) {
                    Rat cand = make_rat(num * sign, dd);
                    if (ht.eval(cand) == 0) {
                        c = cand;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            out.status = Cor31Result::Status::extension_required;
            out.detail = "h(1,t) has no rational root; a field extension is required";
            return out;
        }
    }

    Endo rho{p, p * c};
    RetractionCert cert;
    std::string err;
    if (!certify(rho, p, budget, cert, err))
        throw Error("cor31_retraction: certificate verification failed: " + err);
    out.status = Cor31Result::Status::retract;
    out.c = c;
    out.cert = std::move(cert);
    return out;
}

Cor14Report cor14_lemmas(const Poly& p) {
    if (p.is_zero()) throw PrecondError("cor14_lemmas: zero polynomial");
    Cor14Report rep;
    rep.divisible_by_x = true;
    for (const auto& [m, c] : p.terms())
        if (m.e[0] == 0) rep.divisible_by_x = false;
    rep.y_axis_edge = axis_edge(p, Axis::y);
    // A Jacobian-mate candidate must keep the y-axis edge.
    rep.consistent_with_jacobian_mate = rep.y_axis_edge;
    return rep;
}

}  // namespace kxy
