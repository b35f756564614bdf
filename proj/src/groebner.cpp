#include "kxy/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace kxy {

namespace {

int block_deg(const Mono& m, int from, int to) {
    int d = 0;
    for (int i = from; i < to; ++i) d += m.e[static_cast<std::size_t>(i)];
    return d;
}

bool grlex_range_less(const Mono& a, const Mono& b, int from, int to) {
    int da = block_deg(a, from, to), db = block_deg(b, from, to);
    if (da != db) return da < db;
    for (int i = from; i < to; ++i)
        if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
            return a.e[static_cast<std::size_t>(i)] < b.e[static_cast<std::size_t>(i)];
    return false;
}

Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[static_cast<std::size_t>(i)] = std::max(a.e[i], b.e[i]);
    return r;
}

}  // namespace

bool MonomialOrder::less(const Mono& a, const Mono& b) const {
    switch (kind) {
        case Kind::lex:
            for (int i = 0; i < 4; ++i)
                if (a.e[static_cast<std::size_t>(i)] != b.e[static_cast<std::size_t>(i)])
                    return a.e[static_cast<std::size_t>(i)] < b.e[static_cast<std::size_t>(i)];
            return false;
        case Kind::grlex:
            return grlex_less(a, b);
        case Kind::block_elimination:
            if (grlex_range_less(a, b, 0, block)) return true;
            if (grlex_range_less(b, a, 0, block)) return false;
            return grlex_range_less(a, b, block, 4);
    }
    return false;
}

namespace {

// Basis element with its leading term under the active order and the
// cofactor row expressing it over the original generators.
struct Row {
    Poly p;
    Mono lt;
    std::vector<Poly> cof;
};

class Engine {
public:
    Engine(const MonomialOrder& order, const Budget& budget) : order_(order), budget_(budget) {}

    Mono leading(const Poly& f) const {
        auto it = f.terms().begin();
        Mono best = it->first;
        for (++it; it != f.terms().end(); ++it)
            if (order_.less(best, it->first)) best = it->first;
        return best;
    }

    void tick() const {
        if (++steps_ > budget_.reduction_steps)
            throw BudgetError("reduction step budget exceeded");
    }

    // Scale to integer coefficients with content 1 and positive leading
    // coefficient; keeps rationals small without changing the ideal.
    void normalize_content(Row& row) const {
        Int den(1), num(0);
        for (const auto& [m, c] : row.p.terms()) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        }
        Rat scale = make_rat(den, num);
        if (row.p.coeff(row.lt) * scale < 0) scale = -scale;
        row.p = row.p * scale;
        for (Poly& c : row.cof) c = c * scale;
    }

    // Full normal form of f against rows, tracking the subtracted
    // combination per row. f = sum quots[i] * rows[i].p + remainder.
    Poly normal_form(Poly f, const std::vector<Row>& rows, const std::vector<int>& live,
                     std::vector<Poly>* quots) const {
        Poly rem(f.ring());
        while (!f.is_zero()) {
            tick();
            Mono m = leading(f);
            bool reduced = false;
            for (int i : live) {
                const Row& row = rows[static_cast<std::size_t>(i)];
                if (!row.lt.divides(m)) continue;
                Mono t = m / row.lt;
                Rat lambda = f.coeff(m) / row.p.coeff(row.lt);
                Poly factor(f.ring());
                factor.add_term(t, lambda);
                f = f - factor * row.p;
                if (quots)
                    (*quots)[static_cast<std::size_t>(i)] =
                        (*quots)[static_cast<std::size_t>(i)] + factor;
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.add_term(m, f.coeff(m));
                Poly single(f.ring());
                single.add_term(m, f.coeff(m));
                f = f - single;
            }
        }
        return rem;
    }

    GroebnerBasis run(std::span<const Poly> gens, PairStrategy strategy) {
        if (gens.empty()) throw PrecondError("buchberger: no generators");
        const Ring ring = gens[0].ring();
        for (const Poly& g : gens)
            if (!(g.ring() == ring)) throw RingError("buchberger: generators over mixed rings");

        std::vector<Row> rows;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].is_zero()) continue;
            Row row;
            row.p = gens[j];
            row.lt = leading(row.p);
            row.cof.assign(gens.size(), Poly(ring));
            row.cof[j] = Poly::constant(ring, Rat(1));
            normalize_content(row);
            rows.push_back(std::move(row));
        }
        if (rows.empty()) throw PrecondError("buchberger: all generators are zero");

        using Pair = std::pair<int, int>;
        std::set<Pair> pending;
        auto add_pairs = [&](int upto) {
            for (int i = 0; i < upto; ++i) pending.insert({i, upto});
        };
        for (int i = 1; i < static_cast<int>(rows.size()); ++i) add_pairs(i);

        auto pick = [&]() -> Pair {
            if (strategy == PairStrategy::first) return *pending.begin();
            // Normal strategy: smallest lcm in the active order.
            auto best = pending.begin();
            Mono best_lcm = lcm(rows[static_cast<std::size_t>(best->first)].lt,
                                rows[static_cast<std::size_t>(best->second)].lt);
            for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
                Mono l = lcm(rows[static_cast<std::size_t>(it->first)].lt,
                             rows[static_cast<std::size_t>(it->second)].lt);
                if (order_.less(l, best_lcm)) {
                    best = it;
                    best_lcm = l;
                }
            }
            return *best;
        };

        std::vector<int> live;
        auto refresh_live = [&]() {
            live.resize(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) live[i] = static_cast<int>(i);
        };
        refresh_live();

        while (!pending.empty()) {
            auto [i, j] = pick();
            pending.erase({i, j});
            const Row& a = rows[static_cast<std::size_t>(i)];
            const Row& b = rows[static_cast<std::size_t>(j)];
            Mono l = lcm(a.lt, b.lt);

            // Product criterion: coprime leading monomials.
            if (l == a.lt * b.lt) continue;
            // Chain criterion.
            bool skip = false;
            for (int k = 0; k < static_cast<int>(rows.size()) && !skip; ++k) {
                if (k == i || k == j) continue;
                if (!rows[static_cast<std::size_t>(k)].lt.divides(l)) continue;
                Pair ik{std::min(i, k), std::max(i, k)};
                Pair jk{std::min(j, k), std::max(j, k)};
                if (!pending.contains(ik) && !pending.contains(jk)) skip = true;
            }
            if (skip) continue;

            // S-polynomial with cofactor tracking.
            Poly fa(ring), fb(ring);
            fa.add_term(l / a.lt, Rat(1) / a.p.coeff(a.lt));
            fb.add_term(l / b.lt, Rat(1) / b.p.coeff(b.lt));
            Row s;
            s.p = fa * a.p - fb * b.p;
            s.cof.assign(gens.size(), Poly(ring));
            for (std::size_t g = 0; g < gens.size(); ++g)
                s.cof[g] = fa * a.cof[g] - fb * b.cof[g];

            std::vector<Poly> quots(rows.size(), Poly(ring));
            Poly r = normal_form(s.p, rows, live, &quots);
            if (r.is_zero()) continue;
            for (std::size_t k = 0; k < rows.size(); ++k)
                for (std::size_t g = 0; g < gens.size(); ++g)
                    s.cof[g] = s.cof[g] - quots[k] * rows[k].cof[g];
            s.p = std::move(r);
            s.lt = leading(s.p);
            normalize_content(s);
            rows.push_back(std::move(s));
            refresh_live();
            add_pairs(static_cast<int>(rows.size()) - 1);
            if (static_cast<int>(rows.size()) > budget_.basis_cap)
                throw BudgetError("basis size budget exceeded");
        }

        GroebnerBasis gb = reduce(std::move(rows), gens.size(), ring);

        // Completeness self-check: every S-polynomial of the reduced basis
        // must reduce to zero against it.
        std::vector<Row> final_rows;
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            final_rows.push_back(Row{gb.basis[i], leading(gb.basis[i]), {}});
        std::vector<int> all(final_rows.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < final_rows.size(); ++i)
            for (std::size_t j = i + 1; j < final_rows.size(); ++j) {
                Mono l = lcm(final_rows[i].lt, final_rows[j].lt);
                if (l == final_rows[i].lt * final_rows[j].lt) continue;
                Poly fa(ring), fb(ring);
                fa.add_term(l / final_rows[i].lt,
                            Rat(1) / final_rows[i].p.coeff(final_rows[i].lt));
                fb.add_term(l / final_rows[j].lt,
                            Rat(1) / final_rows[j].p.coeff(final_rows[j].lt));
                Poly s = fa * final_rows[i].p - fb * final_rows[j].p;
                if (!normal_form(s, final_rows, all, nullptr).is_zero())
                    throw Error("buchberger: completeness self-check failed");
            }
        return gb;
    }

private:
    // Minimalize, tail-reduce, normalize and sort into the unique reduced
    // basis for the order.
    GroebnerBasis reduce(std::vector<Row> rows, std::size_t ngens, const Ring& ring) {
        std::vector<int> idx(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return order_.less(rows[static_cast<std::size_t>(a)].lt,
                               rows[static_cast<std::size_t>(b)].lt);
        });
        std::vector<int> kept;
        for (int i : idx) {
            bool divisible = false;
            for (int k : kept)
                if (rows[static_cast<std::size_t>(k)].lt.divides(
                        rows[static_cast<std::size_t>(i)].lt)) {
                    divisible = true;
                    break;
                }
            if (!divisible) kept.push_back(i);
        }

        std::vector<Row> out;
        for (std::size_t pos = 0; pos < kept.size(); ++pos) {
            std::vector<int> others;
            for (std::size_t q = 0; q < kept.size(); ++q)
                if (q != pos) others.push_back(kept[q]);
            Row& row = rows[static_cast<std::size_t>(kept[pos])];
            std::vector<Poly> quots(rows.size(), Poly(ring));
            Poly r = normal_form(row.p, rows, others, &quots);
            Row reduced;
            reduced.p = std::move(r);
            reduced.lt = row.lt;
            reduced.cof = row.cof;
            for (std::size_t k = 0; k < rows.size(); ++k)
                for (std::size_t g = 0; g < ngens; ++g)
                    reduced.cof[g] = reduced.cof[g] - quots[k] * rows[k].cof[g];
            Rat inv = Rat(1) / reduced.p.coeff(reduced.lt);
            reduced.p = reduced.p * inv;
            for (Poly& c : reduced.cof) c = c * inv;
            out.push_back(std::move(reduced));
        }

        GroebnerBasis gb;
        for (Row& row : out) {
            gb.basis.push_back(std::move(row.p));
            gb.cofactors.push_back(std::move(row.cof));
        }
        return gb;
    }

    MonomialOrder order_;
    Budget budget_;
    mutable long steps_ = 0;
};

std::vector<Row> as_rows(const GroebnerBasis& gb, const Engine& eng) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
        rows.push_back(Row{gb.basis[i], eng.leading(gb.basis[i]), gb.cofactors[i]});
    return rows;
}

std::vector<int> all_live(std::size_t n) {
    std::vector<int> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = static_cast<int>(i);
    return live;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order,
                         const Budget& budget, PairStrategy strategy) {
    return Engine(order, budget).run(gens, strategy);
}

std::optional<std::vector<Poly>> ideal_member(const Poly& f, std::span<const Poly> gens,
                                              const Budget& budget) {
    MonomialOrder order = MonomialOrder::grlex();
    Engine eng(order, budget);
    GroebnerBasis gb = buchberger(gens, order, budget);
    std::vector<Row> rows = as_rows(gb, eng);
    std::vector<Poly> quots(rows.size(), Poly(f.ring()));
    Poly r = eng.normal_form(f, rows, all_live(rows.size()), &quots);
    if (!r.is_zero()) return std::nullopt;

    std::vector<Poly> cof(gens.size(), Poly(f.ring()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g)
            cof[g] = cof[g] + quots[i] * rows[i].cof[g];

    Poly check(f.ring());
    for (std::size_t g = 0; g < gens.size(); ++g) check = check + cof[g] * gens[g];
    if (!(check == f)) throw Error("ideal_member: cofactor verification failed");
    return cof;
}

std::optional<UnimodCert> unimodular_cert(const Poly& p, const Budget& budget) {
    if (p.is_constant()) throw PrecondError("unimodular_cert: p must be non-constant");
    std::vector<Poly> grad{partial(p, Var::x), partial(p, Var::y)};
    Poly one = Poly::constant(p.ring(), Rat(1));
    auto cof = ideal_member(one, grad, budget);
    if (!cof) return std::nullopt;
    UnimodCert cert{(*cof)[0], (*cof)[1]};
    if (!(grad[0] * cert.u + grad[1] * cert.v == one))
        throw Error("unimodular_cert: certificate verification failed");
    return cert;
}

namespace {

// Shared by subalg_member and is_automorphism: the tag-variable basis of
// <P - p, Q - q> in K[x,y,P,Q] under an order eliminating {x,y}.
struct TagBasis {
    GroebnerBasis gb;
    MonomialOrder order = MonomialOrder::eliminate_first(2);
};

TagBasis tag_basis(const Poly& p, const Poly& q, const Budget& budget) {
    const Ring& big = Ring::xyPQ();
    std::vector<Poly> gens{Poly::variable(big, Var::P) - change_ring(p, big),
                           Poly::variable(big, Var::Q) - change_ring(q, big)};
    TagBasis tb;
    tb.gb = buchberger(gens, tb.order, budget);
    return tb;
}

// Normal form of f in the tag ring; nullopt when it still involves x or y.
std::optional<Poly> tag_normal_form(const TagBasis& tb, const Poly& f, const Budget& budget) {
    Engine eng(tb.order, budget);
    std::vector<Row> rows = as_rows(tb.gb, eng);
    Poly nf = eng.normal_form(change_ring(f, Ring::xyPQ()), rows, all_live(rows.size()), nullptr);
    for (const auto& [m, c] : nf.terms())
        if (m.e[0] != 0 || m.e[1] != 0) return std::nullopt;
    return change_ring(nf, Ring::PQ());
}

}  // namespace

std::optional<MembershipCert> subalg_member(const Poly& f, const Poly& p, const Poly& q,
                                            const Budget& budget) {
    if (!(f.ring() == Ring::xy() && p.ring() == Ring::xy() && q.ring() == Ring::xy()))
        throw RingError("subalg_member: inputs must live in {x,y}");
    TagBasis tb = tag_basis(p, q, budget);
    auto expr = tag_normal_form(tb, f, budget);
    if (!expr) return std::nullopt;
    std::array<Poly, 2> images{p, q};
    if (!(substitute(*expr, images) == f))
        throw Error("subalg_member: certificate verification failed");
    return MembershipCert{std::move(*expr)};
}

AutoCheck is_automorphism(const Endo& phi, const Budget& budget) {
    TagBasis tb = tag_basis(phi.img_x, phi.img_y, budget);
    auto ex = tag_normal_form(tb, Poly::variable(Ring::xy(), Var::x), budget);
    if (!ex) return {};
    auto ey = tag_normal_form(tb, Poly::variable(Ring::xy(), Var::y), budget);
    if (!ey) return {};

    // Rename the tag variables back to (x, y) to assemble the inverse.
    std::array<Poly, 2> xy{Poly::variable(Ring::xy(), Var::x),
                           Poly::variable(Ring::xy(), Var::y)};
    Endo inv{substitute(*ex, xy), substitute(*ey, xy)};
    if (!(compose(phi, inv, budget) == Endo::identity() &&
          compose(inv, phi, budget) == Endo::identity()))
        throw Error("is_automorphism: inverse verification failed");
    return AutoCheck{true, std::move(inv)};
}

}  // namespace kxy
